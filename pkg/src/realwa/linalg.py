"""Exact dense linear algebra over the rationals.

Vectors are row vectors unless a function says otherwise.  Every value is
immutable and every operation returns a fresh value; entries are
``fractions.Fraction`` so nothing is ever rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ShapeError

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and exact strings ("3", "1/3", "0.25") to a Fraction.

    Floats are refused: their binary value is almost never the number the
    caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a string or Fraction")
    # decimal.Decimal and friends
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Vector:
    entries: tuple

    def __init__(self, entries: Iterable):
        values = tuple(to_rational(e) for e in entries)
        if not values:
            raise ShapeError("a vector needs at least one entry")
        object.__setattr__(self, "entries", values)

    @classmethod
    def zeros(cls, n: int) -> "Vector":
        return cls([0] * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "Vector":
        """The i-th standard basis vector of length n (0-based)."""
        if not 0 <= i < n:
            raise IndexError(f"basis index {i} out of range for length {n}")
        return cls([1 if j == i else 0 for j in range(n)])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other: "Vector") -> "Vector":
        _same_length(self, other)
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vector") -> "Vector":
        _same_length(self, other)
        return Vector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.entries)

    def scale(self, r) -> "Vector":
        r = to_rational(r)
        return Vector(r * a for a in self.entries)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return vec_mat_mul(self, other)
        if isinstance(other, Vector):
            return dot(self, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        return "Vector([" + ", ".join(format_rational(e) for e in self.entries) + "])"


@dataclass(frozen=True, slots=True)
class Matrix:
    rows: tuple

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(to_rational(e) for e in row) for row in rows)
        if not grid or not grid[0]:
            raise ShapeError("a matrix needs at least one row and one column")
        width = len(grid[0])
        for i, row in enumerate(grid):
            if len(row) != width:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {width}")
        object.__setattr__(self, "rows", grid)

    @classmethod
    def _trusted(cls, grid: tuple) -> "Matrix":
        # grid must already be a non-empty rectangular tuple of Fraction tuples
        m = object.__new__(cls)
        object.__setattr__(m, "rows", grid)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_rows(cls, vectors: Sequence[Vector]) -> "Matrix":
        return cls([v.entries for v in vectors])

    @classmethod
    def from_columns(cls, vectors: Sequence[Vector]) -> "Matrix":
        if not vectors:
            raise ShapeError("a matrix needs at least one column")
        return cls(zip(*(v.entries for v in vectors)))

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.rows[i])

    def transpose(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self.rows)))

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_add(self, other)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        if isinstance(other, Vector):
            return mat_vec_mul(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(e) for e in row) for row in self.rows)
        return f"Matrix([{body}])"


def format_rational(r: Fraction) -> str:
    """"p/q", or just "p" when the denominator is 1."""
    return str(r)


def _same_length(u: Vector, v: Vector) -> None:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise ShapeError(f"cannot add {a.shape[0]}x{a.shape[1]} and {b.shape[0]}x{b.shape[1]} matrices")
    return Matrix._trusted(
        tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows))
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ShapeError(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    cols = tuple(zip(*b.rows))
    return Matrix._trusted(
        tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a.rows)
    )


def dot(u: Vector, v: Vector) -> Fraction:
    _same_length(u, v)
    return sum((x * y for x, y in zip(u.entries, v.entries)), Fraction(0))


def vec_mat_mul(v: Vector, a: Matrix) -> Vector:
    if len(v) != a.nrows:
        raise ShapeError(f"row vector of length {len(v)} times {a.shape[0]}x{a.shape[1]} matrix")
    out = [Fraction(0)] * a.ncols
    for coeff, row in zip(v.entries, a.rows):
        if coeff:
            for j, x in enumerate(row):
                if x:
                    out[j] += coeff * x
    return Vector(out)


def mat_vec_mul(a: Matrix, v: Vector) -> Vector:
    if len(v) != a.ncols:
        raise ShapeError(f"{a.shape[0]}x{a.shape[1]} matrix times column vector of length {len(v)}")
    return Vector(sum((x * y for x, y in zip(row, v.entries)), Fraction(0)) for row in a.rows)


def _rref_rows(rows: list) -> tuple:
    """Gauss-Jordan in place on a list of lists; returns the pivot columns."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        k = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        pivot_row = rows[r]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(a: Matrix) -> Matrix:
    rows = [list(r) for r in a.rows]
    _rref_rows(rows)
    return Matrix._trusted(tuple(tuple(r) for r in rows))


def rank(a: Matrix) -> int:
    return sum(1 for row in rref(a).rows if any(row))


def augment(blocks: Sequence[Matrix]) -> Matrix:
    """Concatenate matrices with equal row counts from left to right."""
    if not blocks:
        raise ShapeError("nothing to augment")
    m = blocks[0].nrows
    for k, b in enumerate(blocks):
        if b.nrows != m:
            raise ShapeError(f"block {k} has {b.nrows} rows, expected {m}")
    return Matrix._trusted(
        tuple(tuple(x for b in blocks for x in b.rows[i]) for i in range(m))
    )


def column_matrix(v: Vector) -> Matrix:
    return Matrix._trusted(tuple((x,) for x in v.entries))


def column(a: Matrix, k: int) -> Vector:
    """The k-th column, counting from 1."""
    if not 1 <= k <= a.ncols:
        raise IndexError(f"column {k} out of range 1..{a.ncols}")
    return Vector(row[k - 1] for row in a.rows)


def solve_right(n: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some X with n @ X == b, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if n.nrows != b.nrows:
        raise ShapeError(f"row counts differ: {n.nrows} vs {b.nrows}")
    width = n.ncols
    rows = [list(rn) + list(rb) for rn, rb in zip(n.rows, b.rows)]
    pivots = _rref_rows(rows)
    if any(c >= width for c in pivots):
        # a pivot in the right-hand block means rank grew: no solution
        return None
    x = [[Fraction(0)] * b.ncols for _ in range(width)]
    for r, c in enumerate(pivots):
        x[c] = rows[r][width:]
    return Matrix(x)


def solve_right_vector(n: Matrix, b: Vector) -> Optional[Vector]:
    x = solve_right(n, column_matrix(b))
    return None if x is None else column(x, 1)


def max_norm(v: Vector) -> Fraction:
    return max(abs(x) for x in v.entries)
