"""Exact integer and rational linear algebra.

Rational values are plain ``fractions.Fraction`` (always in lowest terms,
positive denominator).  Matrices are immutable dense grids of Fractions.
Rank is computed by fraction-free (Bareiss) elimination on a
denominator-cleared integer copy; positive semidefiniteness by a symmetric
elimination with diagonal pivoting.  No floating point anywhere: callers
that need float coordinates convert the exact pivot data themselves.

All values are immutable and all functions are pure, so everything here is
safe to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class NotASquareError(ValueError):
    """Raised when an exact integer square root does not exist."""


class NotSymmetricError(ValueError):
    """Raised when a symmetric-only operation receives an asymmetric matrix."""


class NotPSDError(ValueError):
    """Raised when a PSD-only factorization receives an indefinite matrix."""


def isqrt_exact(n: int) -> int:
    """Return the integer m with m*m == n, or raise NotASquareError.

    A NotASquareError downstream signals conference-graph-like parameters
    whose eigenvalues are irrational.
    """
    if n < 0:
        raise ValueError(f"isqrt_exact of negative {n}")
    m = math.isqrt(n)
    if m * m != n:
        raise NotASquareError(f"{n} is not a perfect square")
    return m


class RationalMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Iterable[Iterable[Fraction | int]]):
        grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows")
        self.rows = len(grid)
        self.cols = width
        self._entries = grid

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def filled(cls, rows: int, cols: int, value) -> "RationalMatrix":
        val = Fraction(value)
        return cls([[val] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._entries]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._entries))

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        e = self._entries
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    # Row scaling by the positive lcm of denominators preserves rank.
    out = []
    for row in m._entries:
        scale = math.lcm(*(x.denominator for x in row))
        out.append([int(x * scale) for x in row])
    return out


def rank(m: RationalMatrix) -> int:
    """Exact rank by fraction-free Bareiss elimination (no floats)."""
    a = _integer_rows(m)
    n_rows, n_cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        for i in range(r + 1, n_rows):
            head = a[i][c]
            ai, ar = a[i], a[r]
            for j in range(c + 1, n_cols):
                ai[j] = (ai[j] * pivot - head * ar[j]) // prev
            ai[c] = 0
        prev = pivot
        r += 1
        if r == n_rows:
            break
    return r


def _psd_pivot_steps(m: RationalMatrix):
    """Diagonal-pivot elimination of a symmetric matrix.

    Yields (pivot, row) pairs with m == sum(outer(row, row) / pivot); returns
    None in place of the list if a certificate of indefiniteness shows up.
    """
    if not m.is_symmetric():
        raise NotSymmetricError("PSD test requires a symmetric matrix")
    n = m.rows
    work = [list(row) for row in m._entries]
    active = list(range(n))
    steps = []
    while active:
        if any(work[i][i] < 0 for i in active):
            return None
        piv = next((i for i in active if work[i][i] > 0), None)
        if piv is None:
            # All remaining diagonal entries vanish: PSD forces the whole block
            # to vanish too.
            for i in active:
                wi = work[i]
                if any(wi[j] != 0 for j in active):
                    return None
            return steps
        d = work[piv][piv]
        urow = tuple(work[piv])
        steps.append((d, urow))
        active.remove(piv)
        for i in active:
            head = work[i][piv]
            if head == 0:
                continue
            coef = head / d
            wi = work[i]
            for j in active:
                wi[j] -= coef * urow[j]
    return steps


def is_positive_semidefinite(m: RationalMatrix) -> bool:
    """Exact PSD test: elimination keeps every pivot nonnegative."""
    return _psd_pivot_steps(m) is not None


def psd_pivot_factors(m: RationalMatrix) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    """Return (pivot, row) pairs with m == sum(outer(row,row)/pivot).

    The number of factors equals rank(m).  Raises NotPSDError when m is not
    positive semidefinite.
    """
    steps = _psd_pivot_steps(m)
    if steps is None:
        raise NotPSDError("matrix is not positive semidefinite")
    return steps
