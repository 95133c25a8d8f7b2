"""The zero-one incidence matrix object and its JSON wire format."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class ZeroOneMatrix:
    """An r x c zero-one matrix given by its sorted 1-based one-positions.

    Every row and every column must contain at least one 1 (no zero rows
    or columns), which is what makes the number of matrices with a given
    number of ones finite.
    """

    rows: int
    cols: int
    ones: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        seen_rows, seen_cols = set(), set()
        prev = None
        for i, j in self.ones:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"position ({i},{j}) out of bounds")
            if prev is not None and (i, j) <= prev:
                raise ValueError("one-positions must be strictly sorted")
            prev = (i, j)
            seen_rows.add(i)
            seen_cols.add(j)
        if len(seen_rows) != self.rows:
            raise ValueError("matrix has an all-zero row")
        if len(seen_cols) != self.cols:
            raise ValueError("matrix has an all-zero column")

    @property
    def num_ones(self) -> int:
        return len(self.ones)

    def row_masks(self) -> list[int]:
        """Row bitmasks; bit (cols-1-j) is set when entry (i, j+1) is 1."""
        masks = [0] * self.rows
        for i, j in self.ones:
            masks[i - 1] |= 1 << (self.cols - j)
        return masks

    def transpose(self) -> "ZeroOneMatrix":
        return ZeroOneMatrix(
            rows=self.cols,
            cols=self.rows,
            ones=tuple(sorted((j, i) for i, j in self.ones)),
        )

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        pos = set(self.ones)
        return all((j, i) in pos for i, j in pos)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "ones": [[i, j] for i, j in self.ones],
        }

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "ZeroOneMatrix":
        return cls(
            rows=int(d["rows"]),
            cols=int(d["cols"]),
            ones=tuple(sorted((int(i), int(j)) for i, j in d["ones"])),
        )

    @classmethod
    def from_row_masks(cls, rows: int, cols: int, masks: list[int]) -> "ZeroOneMatrix":
        ones = []
        for i, mask in enumerate(masks, start=1):
            for j in range(1, cols + 1):
                if mask >> (cols - j) & 1:
                    ones.append((i, j))
        return cls(rows=rows, cols=cols, ones=tuple(ones))
