"""Symmetric bit matrices over GF(2).

Rows are stored as Python ints used as bitsets: bit ``j`` of ``rows[i]`` is
the entry ``(i, j)``. Diagonal bits encode loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of a family of bit-rows.

    Gaussian elimination with whole-row XOR; the pivot of a row is its first
    (lowest) nonzero column. The input is not modified.
    """
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


@dataclass(frozen=True)
class SymBitMatrix:
    """Immutable symmetric 0/1 matrix of dimension ``n``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits outside dimension {self.n}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> SymBitMatrix:
        # skips validation; callers guarantee symmetry
        m = object.__new__(cls)
        object.__setattr__(m, "n", n)
        object.__setattr__(m, "rows", rows)
        return m

    @classmethod
    def zeros(cls, n: int) -> SymBitMatrix:
        return cls(n, (0,) * n)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> SymBitMatrix:
        """Build from a nested list of 0/1 entries, e.g. ``[[0, 1], [1, 0]]``."""
        n = len(entries)
        rows = []
        for i, line in enumerate(entries):
            if len(line) != n:
                raise ValueError(f"row {i} has length {len(line)}, expected {n}")
            r = 0
            for j, e in enumerate(line):
                if e not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) = {e!r} is not 0 or 1")
                if e:
                    r |= 1 << j
            rows.append(r)
        return cls(n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def rank(self) -> int:
        return rank_of_rows(self.rows)

    def corank(self) -> int:
        return self.n - self.rank()

    def principal_submatrix(self, idx: Sequence[int]) -> SymBitMatrix:
        """The submatrix on rows and columns ``idx``, in that order."""
        for i in idx:
            if not 0 <= i < self.n:
                raise IndexError(f"index {i} out of range for dimension {self.n}")
        new_rows = []
        for i in idx:
            r = self.rows[i]
            nr = 0
            for k, j in enumerate(idx):
                if (r >> j) & 1:
                    nr |= 1 << k
            new_rows.append(nr)
        return SymBitMatrix._trusted(len(idx), tuple(new_rows))


def rank(m: SymBitMatrix) -> int:
    return m.rank()


def corank(m: SymBitMatrix) -> int:
    return m.corank()


def principal_submatrix(m: SymBitMatrix, idx: Sequence[int]) -> SymBitMatrix:
    return m.principal_submatrix(idx)
