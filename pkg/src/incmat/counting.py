"""Exact closed-form counts of incidence-matrix classes.

An incidence matrix is a zero-one matrix with no all-zero row or column.
F1111(n) counts them by number of ones; this module evaluates F1111 by
three independent routes (Mobius inversion over shapes, an alternating
Stirling/Fubini sum, and a certified truncation of an infinite double
series), plus the symmetric count S11, the transpose-orbit count Phi11,
and Klazar's formulas for F0011/F0111.  All routes are exact except the
series, which returns a value with a certified relative-error bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import binomial, iterate_partitions, preorder_count, stirling1_signed, stirling2

#: Canonical identifiers of the fourteen counting functions (ten distinct
#: F classes after transpose symmetry, plus the four transpose-orbit
#: classes) and the four symmetric classes.
F_CLASS_IDS = (
    "F0000", "F0010", "F1010", "F0001", "F0011",
    "F1001", "F1011", "F0101", "F0111", "F1111",
)
PHI_CLASS_IDS = ("Phi00", "Phi10", "Phi01", "Phi11")
S_CLASS_IDS = ("S00", "S01", "S10", "S11")
ALL_CLASS_IDS = F_CLASS_IDS + PHI_CLASS_IDS + S_CLASS_IDS


@dataclass
class CountTable:
    """Map (class-id, n) -> exact count, with per-entry provenance."""

    entries: dict[tuple[str, int], int] = field(default_factory=dict)
    provenance: dict[tuple[str, int], str] = field(default_factory=dict)

    def set(self, class_id: str, n: int, value: int, provenance: str) -> None:
        if class_id not in ALL_CLASS_IDS:
            raise KeyError(f"unknown class id {class_id!r}")
        if provenance not in ("formula", "brute-force"):
            raise ValueError(f"unknown provenance {provenance!r}")
        if value < 0:
            raise ValueError("counts are nonnegative")
        self.entries[(class_id, n)] = value
        self.provenance[(class_id, n)] = provenance

    def get(self, class_id: str, n: int) -> int:
        return self.entries[(class_id, n)]

    def rows(self) -> list[tuple[str, int, int, str]]:
        """(class, n, value, provenance) rows in fixed display order."""
        order = {cid: i for i, cid in enumerate(ALL_CLASS_IDS)}
        keys = sorted(self.entries, key=lambda kn: (order[kn[0]], kn[1]))
        return [(c, n, self.entries[(c, n)], self.provenance[(c, n)]) for c, n in keys]


def m_count(k: int, l: int, n: int) -> int:
    """Number of k x l zero-one matrices with n ones and no zero row/column.

    By inclusion-exclusion (Mobius inversion over sub-shapes):
        m_kl = sum_{i<=k} sum_{j<=l} (-1)^(k+l-i-j) C(k,i) C(l,j) C(ij,n).
    Convention m_00(0) = 1.
    """
    if k < 0 or l < 0 or n < 0:
        raise ValueError("m_count expects nonnegative arguments")
    if n >= 1 and (k * l < n or k > n or l > n or k == 0 or l == 0):
        return 0
    total = 0
    for i in range(k + 1):
        ck = binomial(k, i)
        for j in range(l + 1):
            term = ck * binomial(l, j) * binomial(i * j, n)
            if (k + l - i - j) % 2:
                total -= term
            else:
                total += term
    return total


def f1111_mobius(n: int) -> int:
    """F1111(n) as the sum of m_count(i, j, n) over all shapes i, j <= n."""
    if n < 1:
        raise ValueError("f1111_mobius expects n >= 1")
    return sum(m_count(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1))


def f1111_stirling(n: int) -> int:
    """F1111(n) = (1/n!) sum_{k=1..n} s(n,k) P(k)^2.

    The alternating sum must be divisible by n!; a nonzero remainder
    signals a transcription bug and raises ArithmeticError.
    """
    if n < 1:
        raise ValueError("f1111_stirling expects n >= 1")
    acc = sum(stirling1_signed(n, k) * preorder_count(k) ** 2 for k in range(1, n + 1))
    q, r = divmod(acc, math.factorial(n))
    if r != 0:
        raise ArithmeticError(f"F1111 Stirling sum not divisible by {n}! (n={n})")
    return q


@dataclass(frozen=True)
class SeriesEstimate:
    """A truncated-series value with a certified relative-error bound.

    `value` is the exact partial sum (a rational; the full series has
    dyadic terms), and `certified_relative_error` bounds
    |value - exact| / exact.
    """

    value: Fraction
    certified_relative_error: Fraction

    def __float__(self) -> float:
        return float(self.value)


def _diagonal_tail_bound(n: int, s_from: int) -> Fraction:
    """Certified upper bound on sum_{k+l >= s_from} C(kl,n) / 2^(k+l+2).

    Termwise C(kl,n) <= (kl)^n/n! <= (s^2/4)^n/n! on the diagonal k+l=s,
    so the diagonal sum is at most g(s) = (s+1) s^(2n) / (n! 4^n 2^(s+2)).
    The ratio g(s+1)/g(s) decreases in s; once it drops below 1 the
    remaining diagonals are bounded by a geometric series.
    """
    nf = math.factorial(n)

    def g(s: int) -> Fraction:
        return Fraction((s + 1) * s ** (2 * n), nf * 4**n * 2 ** (s + 2))

    def ratio(s: int) -> Fraction:
        return Fraction((s + 2) * (s + 1) ** (2 * n), (s + 1) * s ** (2 * n) * 2)

    s = max(s_from, 1)
    total = Fraction(0)
    while ratio(s) >= 1:
        total += g(s)
        s += 1
    return total + g(s) / (1 - ratio(s))


def f1111_series(n: int, rel_tol: float | Fraction) -> SeriesEstimate:
    """Evaluate F1111(n) = sum_{k,l>=0} C(kl,n) / 2^(k+l+2) by truncation.

    Sums over triangles k+l <= T, growing T until the certified tail
    bound falls below rel_tol relative to the accumulated value.  The
    partial sum itself is exact rational arithmetic, so the certified
    bound is the only source of error.
    """
    if n < 1:
        raise ValueError("f1111_series expects n >= 1")
    tol = Fraction(rel_tol)
    if not 0 < tol < 1:
        raise ValueError("rel_tol must lie in (0, 1)")

    total = Fraction(0)
    T = 3 * n + 8
    grown_to = -1
    while True:
        for s in range(grown_to + 1, T + 1):
            scale = Fraction(1, 2 ** (s + 2))
            total += scale * sum(binomial(k * (s - k), n) for k in range(s + 1))
        grown_to = T
        tail = _diagonal_tail_bound(n, T + 1)
        if total > 0 and tail < tol * total:
            return SeriesEstimate(value=total, certified_relative_error=tail / total)
        T += max(4, n // 2)


def symmetric_s_k(k: int, n: int) -> int:
    """Number of k x k symmetric zero-one matrices with n ones.

    Zero rows/columns are allowed here.  Choosing j unordered off-diagonal
    positions (2j ones) and n-2j diagonal ones gives
        s_k = sum_{j=0..n/2} C(C(k,2), j) C(k, n-2j).
    """
    if k < 0 or n < 0:
        raise ValueError("symmetric_s_k expects nonnegative arguments")
    pairs = binomial(k, 2)
    return sum(binomial(pairs, j) * binomial(k, n - 2 * j) for j in range(n // 2 + 1))


def symmetric_mu(i: int, n: int) -> int:
    """Number of i x i symmetric incidence matrices with n ones.

    Binomial inversion of s_k = sum_i C(k,i) mu_i:
        mu_i = sum_{j<=i} (-1)^(i-j) C(i,j) s_j.
    A negative result signals a bug and raises ArithmeticError.
    """
    mu = sum(
        (-1 if (i - j) % 2 else 1) * binomial(i, j) * symmetric_s_k(j, n)
        for j in range(i + 1)
    )
    if mu < 0:
        raise ArithmeticError(f"negative symmetric count mu_{i}({n}) = {mu}")
    return mu


def s11_exact(n: int) -> int:
    """S11(n): symmetric incidence matrices with n ones, exactly.

    Sums the per-dimension counts mu_i for i = 1..n (a symmetric
    incidence matrix with n ones has at most n rows).
    """
    if n < 1:
        raise ValueError("s11_exact expects n >= 1")
    return sum(symmetric_mu(i, n) for i in range(1, n + 1))


def phi11_exact(n: int) -> int:
    """Phi11(n) = (F1111(n) + S11(n)) / 2, transpose-orbit count.

    Orbit counting for the order-2 transposition action; the sum is
    always even, and an odd sum raises ArithmeticError.
    """
    total = f1111_stirling(n) + s11_exact(n)
    q, r = divmod(total, 2)
    if r != 0:
        raise ArithmeticError(f"F1111({n}) + S11({n}) is odd")
    return q


def _klazar_sum(n: int, simple: bool) -> int:
    """Shared evaluator for Klazar's hypergraph-counting formulas.

    For each partition 1^a1 ... l^al of n and each j = l..n the inner
    product multiplies, per part size i, the number of ways to pick the
    a_i edges of size i from an ordered j-set: C(C(j,i), a_i) for simple
    hypergraphs (distinct edges) or C(C(j,i)+a_i-1, a_i) with repetition.
    Parts with a_i = 0 contribute an empty factor of 1.
    """
    total = 0
    for part in iterate_partitions(n):
        mult = part.multiplicities
        low = part.largest_part
        for j in range(low, n + 1):
            prod = 1
            for i, a_i in enumerate(mult, start=1):
                if a_i == 0:
                    continue
                cji = binomial(j, i)
                prod *= binomial(cji, a_i) if simple else binomial(cji + a_i - 1, a_i)
                if prod == 0:
                    break
            if prod == 0:
                continue
            alt = sum(
                (-1 if (m - j) % 2 else 1) * binomial(m, j) for m in range(j, n + 1)
            )
            total += prod * alt
    if total < 0:
        raise ArithmeticError(f"negative Klazar total at n={n}")
    return total


def klazar_f0011(n: int) -> int:
    """F0011(n): vertex-labelled simple hypergraphs of weight n."""
    if n < 1:
        raise ValueError("klazar_f0011 expects n >= 1")
    return _klazar_sum(n, simple=True)


def klazar_f0111(n: int) -> int:
    """F0111(n): vertex-labelled hypergraphs of weight n (repeats allowed)."""
    if n < 1:
        raise ValueError("klazar_f0111 expects n >= 1")
    return _klazar_sum(n, simple=False)


def p_squared_decomposition_check(n: int) -> bool:
    """Check P(n)^2 = sum_{k=1..n} S(n,k) k! F1111(k) exactly.

    Pairs of preorders are classified by the meet of their block
    partitions; a given k-partition arises from k! F1111(k) pairs.
    """
    if n < 1:
        raise ValueError("p_squared_decomposition_check expects n >= 1")
    rhs = sum(
        stirling2(n, k) * math.factorial(k) * f1111_stirling(k) for k in range(1, n + 1)
    )
    return preorder_count(n) ** 2 == rhs


def exact_success_probability(n: int) -> Fraction:
    """Acceptance probability n! F1111(n) / P(n)^2 of the two-preorder draw.

    Drawing two uniform preorders and accepting when no two elements
    share a block in both yields each incidence matrix n! times, so this
    rational in (0, 1] is the exact acceptance rate.
    """
    if n < 1:
        raise ValueError("exact_success_probability expects n >= 1")
    p = Fraction(math.factorial(n) * f1111_stirling(n), preorder_count(n) ** 2)
    if not 0 < p <= 1:
        raise ArithmeticError(f"acceptance probability out of range at n={n}")
    return p
