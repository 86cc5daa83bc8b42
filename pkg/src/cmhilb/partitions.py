"""Partition combinatorics: hooks, diagonals, steepness, rectification.

Convention used everywhere: rows are indexed top down from 0, columns
left to right from 0 (English style), and the cell in row r, column c
sits on antidiagonal k = r + c.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, isqrt

from .exactalg import LaurentPolynomial

DEFAULT_CAP = 30


class CapExceededError(ValueError):
    """Requested size exceeds the configured enumeration cap."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers; () is the partition of 0."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def to_json(self) -> list:
        return list(self.parts)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts, e.g. "4,3,3,1,1"; "" is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        nums = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return Partition(nums)


def cells(lam: Partition):
    """Iterate the diagram cells (row, column)."""
    for r, width in enumerate(lam.parts):
        for c in range(width):
            yield r, c


def transpose(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition()
    cols = [0] * lam.parts[0]
    for width in lam.parts:
        for c in range(width):
            cols[c] += 1
    return Partition(tuple(cols))


@lru_cache(maxsize=None)
def hook_lengths(lam: Partition) -> tuple:
    """Hook length of every cell (arm + leg + 1), sorted descending."""
    t = transpose(lam).parts
    hooks = [
        lam.parts[r] - c + t[c] - r - 1
        for r, width in enumerate(lam.parts)
        for c in range(width)
    ]
    return tuple(sorted(hooks, reverse=True))


def hook_polynomial(lam: Partition) -> LaurentPolynomial:
    """Product of (1 - q^h) over the hook multiset."""
    out = LaurentPolynomial.one()
    for h in hook_lengths(lam):
        out = out * LaurentPolynomial({0: 1, h: -1})
    return out


def n_stat(lam: Partition) -> int:
    """The statistic sum of (i-1)*lam_i with rows counted from 1."""
    return sum(r * width for r, width in enumerate(lam.parts))


def dim_irrep(lam: Partition) -> int:
    """Dimension of the symmetric-group irreducible labeled by lam: n! / prod hooks."""
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(lam.size) // prod


def is_steep(lam: Partition) -> bool:
    """Strictly decreasing parts."""
    return all(a > b for a, b in zip(lam.parts, lam.parts[1:]))


def diagonals(lam: Partition) -> tuple:
    """d_k = number of cells on antidiagonal k, for k = 0 .. max."""
    if not lam.parts:
        return ()
    top = max(r + width - 1 for r, width in enumerate(lam.parts))
    d = [0] * (top + 1)
    for r, c in cells(lam):
        d[r + c] += 1
    return tuple(d)


def u_map(lam: Partition) -> Partition:
    """Push every antidiagonal's cells as far up and to the right as possible.

    Counting form: the i-th part of the result is the number of diagonals
    holding at least i cells.  The result is always steep and has the same
    size as lam.
    """
    d = diagonals(lam)
    if not d:
        return Partition()
    parts = []
    for i in range(1, max(d) + 1):
        parts.append(sum(1 for dk in d if dk >= i))
    return Partition(tuple(parts))


def staircase(m: int) -> Partition:
    """The partition (m, m-1, ..., 1)."""
    if m < 0:
        raise ValueError("staircase index must be nonnegative")
    return Partition(tuple(range(m, 0, -1)))


def is_staircase(lam: Partition) -> bool:
    return lam.parts == tuple(range(len(lam.parts), 0, -1))


def all_hooks_odd(lam: Partition) -> bool:
    return all(h % 2 for h in hook_lengths(lam))


def triangular_index(n: int) -> int | None:
    """m with n = m(m+1)/2, or None when n is not triangular."""
    if n < 0:
        return None
    m = (isqrt(8 * n + 1) - 1) // 2
    return m if m * (m + 1) // 2 == n else None


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP) -> list:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the cap {cap}; raise the cap to proceed")
    return [Partition(t) for t in _partition_tuples(n, n)]
