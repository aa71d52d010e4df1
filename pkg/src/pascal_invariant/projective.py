"""Points and lines of the real projective plane over the rationals.

A point ``(x, y, z)`` and a line ``[X, Y, Z]`` are both nonzero triples up to
scale; the point lies on the line when ``X*x + Y*y + Z*z == 0``. Objects keep
the representative they were built with (several operations depend on it),
while equality and hashing are projective.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import as_rational, integer_primitive


class GeometryError(ValueError):
    """A configuration violates the precondition of a geometric operation."""


def cross(p: Sequence, q: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def dot(p: Sequence, q: Sequence) -> Fraction:
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def det3(p: Sequence, q: Sequence, r: Sequence) -> Fraction:
    return dot(p, cross(q, r))


class _Homogeneous:
    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("homogeneous coordinates need exactly three entries")
        coords = tuple(as_rational(c) for c in coords)
        if not any(coords):
            raise ValueError("all-zero triple is not a projective element")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return not any(cross(self.coords, other.coords))

    def __hash__(self):
        return hash((type(self).__name__, integer_primitive(self.coords)))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"

    def canonical(self):
        """Same element with coprime integer entries, first nonzero positive."""
        return type(self)(integer_primitive(self.coords))

    def scaled(self, factor):
        factor = as_rational(factor)
        if factor == 0:
            raise ValueError("scale factor must be nonzero")
        return type(self)(c * factor for c in self.coords)

    def same_representative(self, other) -> bool:
        return type(other) is type(self) and self.coords == other.coords


class ProjPoint(_Homogeneous):
    """A point ``(x, y, z)``."""

    __slots__ = ()

    def on(self, line: "ProjLine") -> bool:
        return dot(self.coords, line.coords) == 0

    def is_at_infinity(self) -> bool:
        return self.coords[2] == 0

    def affine(self) -> tuple[Fraction, Fraction] | None:
        x, y, z = self.coords
        if z == 0:
            return None
        return x / z, y / z


class ProjLine(_Homogeneous):
    """A line ``[X, Y, Z]``: the points with ``X*x + Y*y + Z*z = 0``."""

    __slots__ = ()

    def contains(self, p: ProjPoint) -> bool:
        return dot(self.coords, p.coords) == 0


def combine(alpha, u: _Homogeneous, beta, v: _Homogeneous):
    """The element ``alpha*u + beta*v`` built from the given representatives."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    vals = tuple(alpha * a + beta * b for a, b in zip(u.coords, v.coords))
    if not any(vals):
        raise GeometryError("combination vanishes")
    return type(u)(vals)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Intersection point of two distinct lines, canonically normalized."""
    c = cross(l1.coords, l2.coords)
    if not any(c):
        raise GeometryError("lines coincide")
    return ProjPoint(integer_primitive(c))


def join(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    """Line through two distinct points, canonically normalized."""
    c = cross(p1.coords, p2.coords)
    if not any(c):
        raise GeometryError("points coincide")
    return ProjLine(integer_primitive(c))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return det3(l.coords, m.coords, n.coords) == 0


def dual(x):
    """Point ``(a, b, c)`` <-> line ``[a, b, c]``, keeping the representative."""
    if isinstance(x, ProjPoint):
        return ProjLine(x.coords)
    if isinstance(x, ProjLine):
        return ProjPoint(x.coords)
    raise TypeError(f"cannot dualize {type(x).__name__}")


def dualize(figure):
    """Dual figure: every point becomes a line and vice versa.

    Accepts a single element, a :class:`Figure`, or any iterable of points and
    lines (returned as a list in the same order).
    """
    if isinstance(figure, (ProjPoint, ProjLine)):
        return dual(figure)
    if isinstance(figure, Figure):
        return Figure(
            points=tuple(dual(l) for l in figure.lines),
            lines=tuple(dual(p) for p in figure.points),
        )
    return [dual(x) for x in figure]


@dataclass(frozen=True)
class Figure:
    points: tuple[ProjPoint, ...] = ()
    lines: tuple[ProjLine, ...] = ()

    def incidences(self) -> set[tuple[int, int]]:
        """Pairs ``(i, j)`` with point ``i`` on line ``j``."""
        return {
            (i, j)
            for i, p in enumerate(self.points)
            for j, l in enumerate(self.lines)
            if p.on(l)
        }


@dataclass(frozen=True)
class Decomposition:
    """Coefficients with ``alpha*u + beta*v`` projectively equal to a point."""

    alpha: Fraction
    beta: Fraction

    @property
    def ratio(self) -> Fraction:
        """``beta/alpha``; raises when the point coincides with ``v``."""
        if self.alpha == 0:
            raise ZeroDivisionError("point coincides with the second basis element")
        return self.beta / self.alpha


def _independent_rows(u: Sequence, v: Sequence) -> tuple[int, int, Fraction]:
    for i, j in ((0, 1), (0, 2), (1, 2)):
        d = u[i] * v[j] - u[j] * v[i]
        if d != 0:
            return i, j, d
    raise GeometryError("degenerate basis")


def decompose(p: _Homogeneous, u: _Homogeneous, v: _Homogeneous) -> Decomposition:
    """Solve ``p ~ alpha*u + beta*v`` for the given representatives of u and v.

    Works for points and, dually, for lines through a common point. The pair
    is returned as coprime integers with first nonzero entry positive.
    """
    i, j, d = _independent_rows(u.coords, v.coords)
    pc, uc, vc = p.coords, u.coords, v.coords
    alpha = (pc[i] * vc[j] - pc[j] * vc[i]) / d
    beta = (uc[i] * pc[j] - uc[j] * pc[i]) / d
    k = 3 - i - j
    if alpha * uc[k] + beta * vc[k] != pc[k] or (alpha == 0 and beta == 0):
        raise GeometryError("point off span")
    a, b = integer_primitive((alpha, beta))
    return Decomposition(Fraction(a), Fraction(b))


@dataclass(frozen=True, init=False)
class TriFrame:
    """Three lines with no common point and their canonical vertices.

    ``u = c x a``, ``v = a x b``, ``w = b x c``, so ``a = (u, v)``,
    ``b = (v, w)`` and ``c = (w, u)``.
    """

    a: ProjLine
    b: ProjLine
    c: ProjLine
    u: ProjPoint
    v: ProjPoint
    w: ProjPoint

    def __init__(self, a: ProjLine, b: ProjLine, c: ProjLine):
        a, b, c = (l if isinstance(l, ProjLine) else ProjLine(l) for l in (a, b, c))
        if a == b or b == c or a == c:
            raise GeometryError("frame lines must be pairwise distinct")
        if concurrent(a, b, c):
            raise GeometryError("frame lines have a common point")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "u", meet(c, a))
        object.__setattr__(self, "v", meet(a, b))
        object.__setattr__(self, "w", meet(b, c))

    @property
    def lines(self) -> tuple[ProjLine, ProjLine, ProjLine]:
        return self.a, self.b, self.c

    @property
    def vertices(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return self.u, self.v, self.w

    def sides(self, vertices=None):
        """``((u, v), (v, w), (w, u))`` using optional alternative representatives."""
        u, v, w = vertices if vertices is not None else self.vertices
        return (u, v), (v, w), (w, u)


def check_representatives(reference: Sequence[ProjPoint], given: Sequence[ProjPoint]) -> tuple:
    """Validate that ``given`` are representatives of the ``reference`` points."""
    given = tuple(p if isinstance(p, ProjPoint) else ProjPoint(p) for p in given)
    if len(given) != len(reference) or any(g != r for g, r in zip(given, reference)):
        raise GeometryError("representatives do not match the frame vertices")
    return given


def cross_ratio(u, v, p, q) -> Fraction:
    """Classical cross ratio ``a1*b2 / (a2*b1)`` of collinear p, q over u, v.

    Unlike the characteristic ratio it does not depend on the representatives.
    """
    d1, d2 = decompose(p, u, v), decompose(q, u, v)
    return (d1.alpha * d2.beta) / (d2.alpha * d1.beta)


def as_points(items: Iterable) -> list[ProjPoint]:
    return [p if isinstance(p, ProjPoint) else ProjPoint(p) for p in items]
