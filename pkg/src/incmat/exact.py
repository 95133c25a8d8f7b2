"""Exact arbitrary-precision combinatorial primitives.

Everything here is computed with Python integers and is exact by
construction: binomial coefficients, Stirling numbers of both kinds,
ordered-set-partition (Fubini) numbers, involution counts, Bell numbers
and integer partitions.  The triangular tables are memoized and grown on
demand; all functions are pure, so the caches are safe for concurrent
readers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


def binomial(a: int, b: int) -> int:
    """C(a, b), exactly; 0 when b > a or b < 0."""
    if a < 0:
        raise ValueError("binomial expects a >= 0")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


# Triangular tables, row n holds values for k = 0..n.  Append-only.
_stirling2_rows: list[list[int]] = [[1]]
_stirling1_rows: list[list[int]] = [[1]]


def _grow_stirling2(n: int) -> None:
    while len(_stirling2_rows) <= n:
        m = len(_stirling2_rows)
        prev = _stirling2_rows[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            # S(m,k) = k*S(m-1,k) + S(m-1,k-1)
            row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
        _stirling2_rows.append(row)


def _grow_stirling1(n: int) -> None:
    while len(_stirling1_rows) <= n:
        m = len(_stirling1_rows)
        prev = _stirling1_rows[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            # s(m,k) = s(m-1,k-1) - (m-1)*s(m-1,k)
            row[k] = prev[k - 1] - (m - 1) * (prev[k] if k < m else 0)
        _stirling1_rows.append(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k); S(0, 0) = 1."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 expects n, k >= 0")
    if k > n:
        return 0
    _grow_stirling2(n)
    return _stirling2_rows[n][k]


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k).

    Defined by sum_k s(n,k) x^k = x(x-1)...(x-n+1); s(0, 0) = 1.
    """
    if n < 0 or k < 0:
        raise ValueError("stirling1_signed expects n, k >= 0")
    if k > n:
        return 0
    _grow_stirling1(n)
    return _stirling1_rows[n][k]


def preorder_count(n: int) -> int:
    """Number of preorders (ordered set partitions) of an n-set.

    These are the Fubini numbers: P(n) = sum_k k! S(n,k), P(0) = 1.
    """
    if n < 0:
        raise ValueError("preorder_count expects n >= 0")
    _grow_stirling2(n)
    row = _stirling2_rows[n]
    return sum(math.factorial(k) * row[k] for k in range(n + 1))


def preorder_count_by_blocks(n: int, k: int) -> int:
    """Number of preorders of an n-set with exactly k blocks: k! S(n,k)."""
    return math.factorial(k) * stirling2(n, k)


def involution_count(n: int) -> int:
    """Number of involutions (permutations with square = identity) on n points.

    Recurrence I(n) = I(n-1) + (n-1) I(n-2) with I(0) = I(1) = 1.
    """
    if n < 0:
        raise ValueError("involution_count expects n >= 0")
    a, b = 1, 1  # I(0), I(1)
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b if n >= 1 else a


def bell(n: int) -> int:
    """Bell number b(n) = sum_k S(n, k)."""
    if n < 0:
        raise ValueError("bell expects n >= 0")
    _grow_stirling2(n)
    return sum(_stirling2_rows[n])


@dataclass(frozen=True)
class IntegerPartition:
    """A partition of n in multiplicity form 1^a1 2^a2 ... l^al with a_l > 0."""

    n: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        a = self.multiplicities
        if not a or a[-1] == 0:
            raise ValueError("largest part must have positive multiplicity")
        if any(m < 0 for m in a):
            raise ValueError("multiplicities must be nonnegative")
        if sum(i * m for i, m in enumerate(a, start=1)) != self.n:
            raise ValueError("multiplicities do not sum to n")

    @property
    def largest_part(self) -> int:
        return len(self.multiplicities)

    def parts(self) -> list[int]:
        """Parts in weakly decreasing order."""
        out: list[int] = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return out


def iterate_partitions(n: int) -> Iterator[IntegerPartition]:
    """Yield every integer partition of n exactly once.

    Order is lexicographic on the weakly-decreasing part lists, largest
    part first (n itself comes first, the all-ones partition last).
    """
    if n < 1:
        raise ValueError("iterate_partitions expects n >= 1")

    def rec(remaining: int, max_part: int, acc: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield acc
            return
        for part in range(min(max_part, remaining), 0, -1):
            yield from rec(remaining - part, part, acc + [part])

    for parts in rec(n, n, []):
        mult = [0] * parts[0]
        for p in parts:
            mult[p - 1] += 1
        yield IntegerPartition(n=n, multiplicities=tuple(mult))


def partition_count(n: int) -> int:
    """Partition function p(n) via Euler's pentagonal-number recurrence.

    Independent of iterate_partitions; used to cross-check the stream.
    """
    if n < 0:
        raise ValueError("partition_count expects n >= 0")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
