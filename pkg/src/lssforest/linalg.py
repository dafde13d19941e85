"""Exact rational linear algebra.

Ranks and determinants go through fraction-free (Bareiss) elimination on
integer rows; nullspaces use reduced row echelon form over ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, ShapeMismatch


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def primitive_integer_row(row: Sequence[Fraction]) -> list:
    """Scale a rational row to coprime integers (same span, same rank contribution)."""
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [x.numerator * (den // x.denominator) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def bareiss_rank(rows: list) -> int:
    """Rank of an integer matrix given as a list of lists. Mutates ``rows``."""
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        prow = rows[rank]
        for r in range(rank + 1, nrows):
            row = rows[r]
            a = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - prow[c] * a) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def bareiss_det(rows: list) -> int:
    """Determinant of a square integer matrix. Mutates ``rows``."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if piv is None:
                return 0
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        for r in range(k + 1, n):
            row = rows[r]
            a = row[k]
            for c in range(k + 1, n):
                row[c] = (row[c] * p - rows[k][c] * a) // prev
            row[k] = 0
        prev = p
    return sign * rows[n - 1][n - 1]


class RationalMatrix:
    """Immutable dense matrix of ``Fraction`` entries."""

    __slots__ = ("_rows", "nrows", "ncols", "_int_rows")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_frac(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ShapeMismatch("cannot infer column count of an empty matrix")
            ncols = len(data[0])
        for r in data:
            if len(r) != ncols:
                raise ShapeMismatch(f"ragged matrix: expected {ncols} columns, got {len(r)}")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._int_rows = None

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> tuple:
        """Row ``i`` (1-based)."""
        self._check_index(i)
        return self._rows[i - 1]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"RationalMatrix({self.nrows}x{self.ncols}: [{body}])"

    def with_row(self, i: int, values) -> "RationalMatrix":
        self._check_index(i)
        values = tuple(_frac(x) for x in values)
        if len(values) != self.ncols:
            raise ShapeMismatch(f"row has {len(values)} entries, matrix has {self.ncols} columns")
        rows = list(self._rows)
        rows[i - 1] = values
        return RationalMatrix(rows, self.ncols)

    def submatrix(self, rows: Iterable[int]) -> "RationalMatrix":
        idx = list(rows)
        for i in idx:
            self._check_index(i)
        return RationalMatrix([self._rows[i - 1] for i in idx], self.ncols)

    def is_zero_row(self, i: int) -> bool:
        return not any(self.row(i))

    def integer_rows(self) -> tuple:
        """Each row scaled to a primitive integer vector (cached)."""
        if self._int_rows is None:
            self._int_rows = tuple(tuple(primitive_integer_row(r)) for r in self._rows)
        return self._int_rows

    def rank(self, rows: Iterable[int] | None = None) -> int:
        ints = self.integer_rows()
        if rows is None:
            work = [list(r) for r in ints]
        else:
            work = []
            for i in rows:
                self._check_index(i)
                work.append(list(ints[i - 1]))
        return bareiss_rank(work)

    def _check_index(self, i):
        if not 1 <= i <= self.nrows:
            raise IndexOutOfRange(f"row index {i} outside 1..{self.nrows}")


def vector_rank(matrix: RationalMatrix, rows: Iterable[int]) -> int:
    """Exact rank of the rows of ``matrix`` listed in ``rows`` (1-based)."""
    return matrix.rank(rows)


def rref(rows: list) -> tuple:
    """Reduced row echelon form over Fractions. Returns (matrix, pivot columns)."""
    m = [[_frac(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of {w : row . w = 0 for every row}, one vector per free column.

    Vectors are ordered by their free column, so the first one is
    deterministic for a given input.
    """
    if not rows:
        return [tuple(Fraction(int(k == c)) for k in range(ncols)) for c in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        w = [Fraction(0)] * ncols
        w[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            w[pc] = -m[r][f]
        basis.append(tuple(w))
    return basis


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
