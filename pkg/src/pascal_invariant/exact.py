"""Exact rational scalars and dense linear algebra over the rationals.

Rationals are :class:`fractions.Fraction`. Matrices are immutable row-major
grids of fractions; rank, determinant and nullspace are computed by
fraction-free (Bareiss) elimination after clearing row denominators.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


def rat_normalize(n: int, d: int) -> Fraction:
    """Canonical rational ``n/d``: reduced, sign carried by the numerator."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


def as_rational(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently bring rounding into the kernel.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational literal: {value!r}")
        num, sep, den = text.partition("/")
        if sep:
            return rat_normalize(int(num), int(den))
        return Fraction(int(num))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def integer_primitive(values: Sequence) -> tuple[int, ...]:
    """Scale a vector to coprime integers with its first nonzero entry positive.

    The zero vector is returned unchanged (as integers).
    """
    fracs = [as_rational(v) for v in values]
    den = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [f.numerator * (den // f.denominator) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


class RatMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        grid = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if ncols is None:
            if not grid:
                raise ValueError("column count required for a matrix with no rows")
            ncols = len(grid[0])
        if any(len(row) != ncols for row in grid):
            raise ValueError("ragged matrix rows")
        self._rows = grid
        self.nrows = len(grid)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"RatMatrix({self.nrows}x{self.ncols}: [{body}])"

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows
        )

    @property
    def T(self) -> "RatMatrix":
        return self.transpose()

    def matvec(self, x: Sequence) -> tuple[Fraction, ...]:
        x = [as_rational(v) for v in x]
        if len(x) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self._rows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other._rows))
        return RatMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows],
            other.ncols,
        )

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return RatMatrix([a + b for a, b in zip(self._rows, other._rows)], self.ncols + other.ncols)

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return RatMatrix(self._rows + other._rows, self.ncols)

    def to_list(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]


def _integer_rows(M: RatMatrix) -> tuple[list[list[int]], int]:
    """Clear denominators row by row; also return the product of the scale factors."""
    rows = []
    scale = 1
    for row in M.rows:
        den = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([x.numerator * (den // x.denominator) for x in row])
        scale *= den
    return rows, scale


def _bareiss(rows: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
    """In-place fraction-free row echelon form.

    Returns the reduced rows, the pivot columns, and the parity of row swaps
    (+1 or -1). Pivots are the first nonzero entry found scanning down each
    column.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
            sign = -sign
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, ncols):
                # exact: every entry is a minor of the original matrix
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def mat_rank(M: RatMatrix) -> int:
    """Exact rank over the rationals."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    rows, _ = _integer_rows(M)
    _, pivots, _ = _bareiss(rows)
    return len(pivots)


def mat_det(M: RatMatrix) -> Fraction:
    """Exact determinant of a square matrix."""
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = M.nrows
    if n == 0:
        return Fraction(1)
    rows, scale = _integer_rows(M)
    rows, pivots, sign = _bareiss(rows)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1], scale)


def mat_nullspace(M: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace ``{x : M x = 0}``.

    One vector per free column, in ascending free-column order; each is the
    reduced-echelon solution with that free variable set to one, rescaled to
    coprime integers with first nonzero entry positive.
    """
    n = M.ncols
    if M.nrows == 0:
        rows, pivots = [], []
    else:
        rows, _ = _integer_rows(M)
        rows, pivots, _ = _bareiss(rows)
    pivot_set = set(pivots)
    basis = []
    for f in (c for c in range(n) if c not in pivot_set):
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = rows[r]
            s = sum((row[j] * x[j] for j in range(c + 1, n) if row[j]), Fraction(0))
            x[c] = -s / row[c]
        basis.append(tuple(Fraction(v) for v in integer_primitive(x)))
    return basis


def solve_exact(M: RatMatrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """One particular solution of ``M x = b``, or None when inconsistent."""
    aug = M.hstack(RatMatrix([[v] for v in b], 1))
    null = mat_nullspace(aug)
    # a solution exists iff some kernel vector of [M | b] has nonzero last entry
    for vec in null:
        if vec[-1] != 0:
            return tuple(-v / vec[-1] for v in vec[:-1])
    return None


def in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """Whether ``target`` is an exact linear combination of ``vectors``."""
    if not vectors:
        return all(as_rational(t) == 0 for t in target)
    cols = RatMatrix(list(zip(*vectors)), len(vectors))
    return solve_exact(cols, target) is not None
