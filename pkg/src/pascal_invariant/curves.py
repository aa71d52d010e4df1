"""Homogeneous plane curves over the rationals and their characteristic numbers.

A curve of degree ``n`` is a homogeneous polynomial ``P(x, y, z)`` stored as a
dense coefficient vector over the degree-``n`` monomials in graded
lexicographic order (``x^n, x^(n-1) y, x^(n-1) z, x^(n-2) y^2, ...``).

The characteristic ratio of a curve along a line ``(u, v)`` is the product of
``b_i / a_i`` over the ``n`` intersections ``p_i = a_i u + b_i v``. The
intersections are the roots of the binary form ``g(s, t) = P(s u + t v)``,
whose end coefficients are ``P(u)`` and ``P(v)``; by Vieta the ratio is
``(-1)^n P(u) / P(v)`` and is computed that way, without finding any root.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Iterable, Mapping, Sequence

from .exact import RatMatrix, as_rational, in_span, integer_primitive, mat_det, mat_nullspace
from .projective import (
    GeometryError,
    ProjLine,
    ProjPoint,
    TriFrame,
    as_points,
    collinear,
    decompose,
    join,
)

_VARS = "xyz"


@lru_cache(maxsize=None)
def monomials(degree: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of total ``degree`` in graded lexicographic order."""
    if degree < 0:
        raise ValueError("negative degree")
    return tuple(
        (i, j, degree - i - j) for i in range(degree, -1, -1) for j in range(degree - i, -1, -1)
    )


def monomial_count(degree: int) -> int:
    return comb(degree + 2, 2)


def monomial_values(p: Sequence, degree: int) -> list[Fraction]:
    x, y, z = p
    return [x**i * y**j * z**k for i, j, k in monomials(degree)]


def _format_monomial(exps) -> str:
    parts = []
    for var, e in zip(_VARS, exps):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class HomCurve:
    """Homogeneous polynomial of a fixed degree, coefficients in grlex order."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("negative degree")
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != monomial_count(self.degree):
            raise ValueError(
                f"degree {self.degree} needs {monomial_count(self.degree)} coefficients, got {len(coeffs)}"
            )
        if not any(coeffs):
            raise ValueError("the zero polynomial does not define a curve")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_terms(cls, degree: int, terms: Mapping[tuple[int, int, int], object]) -> "HomCurve":
        index = {m: i for i, m in enumerate(monomials(degree))}
        coeffs = [Fraction(0)] * len(index)
        for exps, c in terms.items():
            if tuple(exps) not in index:
                raise ValueError(f"monomial {exps} is not of degree {degree}")
            coeffs[index[tuple(exps)]] += as_rational(c)
        return cls(degree, tuple(coeffs))

    @classmethod
    def from_line(cls, line) -> "HomCurve":
        return cls(1, tuple(line))

    def terms(self) -> dict[tuple[int, int, int], Fraction]:
        return {m: c for m, c in zip(monomials(self.degree), self.coeffs) if c != 0}

    def __call__(self, p: Sequence) -> Fraction:
        return evaluate(self, p)

    def __mul__(self, other):
        if isinstance(other, HomCurve):
            out: dict[tuple[int, int, int], Fraction] = {}
            for m1, c1 in self.terms().items():
                for m2, c2 in other.terms().items():
                    key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return HomCurve.from_terms(self.degree + other.degree, out)
        factor = as_rational(other)
        return HomCurve(self.degree, tuple(c * factor for c in self.coeffs))

    __rmul__ = __mul__

    def __add__(self, other: "HomCurve") -> "HomCurve":
        if other.degree != self.degree:
            raise ValueError("cannot add curves of different degree")
        return HomCurve(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __pow__(self, k: int) -> "HomCurve":
        out = HomCurve(0, (1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, var: int) -> "HomCurve | None":
        """Partial derivative in ``x``, ``y`` or ``z`` (0, 1, 2); None if it vanishes."""
        if self.degree == 0:
            return None
        out = {}
        for m, c in self.terms().items():
            if m[var]:
                key = list(m)
                key[var] -= 1
                out[tuple(key)] = c * m[var]
        if not any(out.values()):
            return None
        return HomCurve.from_terms(self.degree - 1, out)

    def canonical(self) -> "HomCurve":
        return HomCurve(self.degree, tuple(Fraction(c) for c in integer_primitive(self.coeffs)))

    def is_proportional(self, other: "HomCurve") -> bool:
        return self.degree == other.degree and self.canonical() == other.canonical()

    def __str__(self):
        pieces = []
        for m, c in self.terms().items():
            mono = _format_monomial(m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def evaluate(C: HomCurve, p: Sequence) -> Fraction:
    """Value of the polynomial at the given representative of ``p``."""
    x, y, z = (as_rational(c) for c in p)
    return sum(
        (c * x**i * y**j * z**k for (i, j, k), c in zip(monomials(C.degree), C.coeffs) if c),
        Fraction(0),
    )


def gradient(C: HomCurve, p: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(
        Fraction(0) if (d := C.derivative(i)) is None else evaluate(d, p) for i in range(3)
    )


def hessian_det(C: HomCurve, p: Sequence) -> Fraction:
    H = []
    for i in range(3):
        di = C.derivative(i)
        row = []
        for j in range(3):
            dij = None if di is None else di.derivative(j)
            row.append(Fraction(0) if dij is None else evaluate(dij, p))
        H.append(row)
    return mat_det(RatMatrix(H, 3))


@dataclass(frozen=True)
class BinaryForm:
    """``g(s, t) = sum(c_i * s^(n-i) * t^i)``; the zero form is allowed."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, s, t) -> Fraction:
        n = self.degree
        s, t = as_rational(s), as_rational(t)
        return sum((c * s ** (n - i) * t**i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def divide_root(self, s0, t0) -> "BinaryForm":
        """Exact quotient by the linear factor ``t0*s - s0*t`` vanishing at ``(s0:t0)``."""
        s0, t0 = as_rational(s0), as_rational(t0)
        if s0 == 0 and t0 == 0:
            raise ValueError("(0:0) is not a root")
        c = list(self.coeffs)
        n = len(c) - 1
        if n < 1:
            raise GeometryError("constant form has no linear factor")
        d0, d1 = t0, -s0
        if d0 != 0:
            q = []
            for i in range(n):
                f = c[i] / d0
                q.append(f)
                c[i + 1] -= f * d1
            remainder = c[n]
        else:
            remainder = c[0]
            q = [x / d1 for x in c[1:]]
        if remainder != 0:
            raise GeometryError(f"({s0}:{t0}) is not a root of the form")
        return BinaryForm(tuple(q))

    def linear_root(self) -> tuple[Fraction, Fraction]:
        """The root ``(s:t)`` of a nonzero linear form."""
        if self.degree != 1 or self.is_zero():
            raise GeometryError("not a nonzero linear form")
        c0, c1 = self.coeffs
        return c1, -c0


def restrict_to_line(C: HomCurve, u: Sequence, v: Sequence) -> BinaryForm:
    """Expand ``P(s*u + t*v)`` as a binary form of degree ``C.degree``."""
    u = [as_rational(c) for c in u]
    v = [as_rational(c) for c in v]
    linear = [BinaryForm((u[k], v[k])) for k in range(3)]
    powers = []
    for k in range(3):
        pw = [BinaryForm((Fraction(1),))]
        for _ in range(C.degree):
            pw.append(pw[-1] * linear[k])
        powers.append(pw)
    out = [Fraction(0)] * (C.degree + 1)
    for (i, j, k), c in zip(monomials(C.degree), C.coeffs):
        if c:
            term = powers[0][i] * powers[1][j] * powers[2][k]
            for idx, val in enumerate(term.coeffs):
                out[idx] += c * val
    return BinaryForm(tuple(out))


def points_on_line(line: ProjLine) -> tuple[ProjPoint, ProjPoint]:
    """Two distinct, deterministic points of a line."""
    found: list[ProjPoint] = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        x, y, z = line.coords
        c = (y * e[2] - z * e[1], z * e[0] - x * e[2], x * e[1] - y * e[0])
        if any(c):
            p = ProjPoint(c).canonical()
            if all(p != q for q in found):
                found.append(p)
        if len(found) == 2:
            return found[0], found[1]
    raise AssertionError("a line always has two distinct axis intersections")


def contains_line(C: HomCurve, line: ProjLine) -> bool:
    """Whether ``line`` is a component of the curve."""
    p, q = points_on_line(line)
    return restrict_to_line(C, p, q).is_zero()


class Degenerate(enum.Enum):
    """Characteristic ratios with an intersection at a basis point."""

    ZERO = "zero"  # an intersection coincides with the first basis point
    INFINITE = "infinite"  # an intersection coincides with the second basis point


ZERO_DEGENERATE = Degenerate.ZERO
INFINITE_DEGENERATE = Degenerate.INFINITE


def char_ratio_points(u: ProjPoint, v: ProjPoint, points: Iterable, multiplicities: Sequence[int] | None = None):
    """``[u, v; p_1, ..., p_k]``: product of ``b_i / a_i`` with ``p_i = a_i u + b_i v``.

    Returns a Fraction, or :data:`ZERO_DEGENERATE` / :data:`INFINITE_DEGENERATE`
    when some point coincides with ``u`` / ``v``.
    """
    points = as_points(points)
    if multiplicities is None:
        multiplicities = [1] * len(points)
    if len(multiplicities) != len(points):
        raise ValueError("one multiplicity per point")
    value = Fraction(1)
    hits_u = hits_v = False
    for p, m in zip(points, multiplicities):
        d = decompose(p, u, v)
        if d.beta == 0:
            hits_u = True
        elif d.alpha == 0:
            hits_v = True
        else:
            value *= (d.beta / d.alpha) ** m
    if hits_u and hits_v:
        raise GeometryError("ratio is indeterminate: points at both basis points")
    if hits_u:
        return ZERO_DEGENERATE
    if hits_v:
        return INFINITE_DEGENERATE
    return value


def char_ratio_curve_line(C: HomCurve, u: Sequence, v: Sequence):
    """Characteristic ratio of the curve's intersections with the line ``(u, v)``.

    Equals ``(-1)^n P(u) / P(v)``, counting complex and repeated
    intersections with multiplicity.
    """
    Pu, Pv = evaluate(C, u), evaluate(C, v)
    if Pu == 0 and Pv == 0:
        if restrict_to_line(C, u, v).is_zero():
            raise GeometryError("line component")
        raise GeometryError("ratio is indeterminate: curve passes through both basis points")
    if Pv == 0:
        return INFINITE_DEGENERATE
    if Pu == 0:
        return ZERO_DEGENERATE
    return (-1) ** C.degree * Pu / Pv


def char_number(C: HomCurve, frame: TriFrame, vertices: Sequence | None = None) -> Fraction:
    """Cyclic product ``[u,v;C∩a] * [v,w;C∩b] * [w,u;C∩c]`` over a frame.

    ``vertices`` optionally overrides the canonical representatives of
    ``u, v, w``; the result does not depend on them.
    """
    for line in frame.lines:
        if contains_line(C, line):
            raise GeometryError("line component")
    if vertices is None:
        vertices = frame.vertices
    for vert in vertices:
        if evaluate(C, vert) == 0:
            raise GeometryError("vertex on curve")
    value = Fraction(1)
    for p, q in frame.sides(vertices):
        value *= char_ratio_curve_line(C, p, q)
    return value


def frame_ratio_product(frame: TriFrame, on_a: Iterable, on_b: Iterable, on_c: Iterable, vertices=None):
    """``[u,v;on_a] * [v,w;on_b] * [w,u;on_c]`` for explicit points on the frame lines.

    Returns None when a point lands on a frame vertex (the ratio degenerates).
    """
    sides = frame.sides(vertices)
    value = Fraction(1)
    for (p, q), pts in zip(sides, (on_a, on_b, on_c)):
        r = char_ratio_points(p, q, pts)
        if isinstance(r, Degenerate):
            return None
        value *= r
    return value


def evaluation_matrix(points: Iterable, degree: int) -> RatMatrix:
    return RatMatrix([monomial_values(p, degree) for p in points], monomial_count(degree))


def fit_curves(points: Iterable, degree: int) -> list[HomCurve]:
    """Basis of the degree-``degree`` curves through all points (possibly empty)."""
    M = evaluation_matrix(list(points), degree)
    return [HomCurve(degree, vec) for vec in mat_nullspace(M)]


def frame_product_curve(frame: TriFrame) -> HomCurve:
    """The cubic ``a * b * c`` made of the three frame lines."""
    a, b, c = (HomCurve.from_line(l) for l in frame.lines)
    return a * b * c


def frame_multiples(frame: TriFrame, degree: int) -> list[HomCurve]:
    """Spanning set of the degree-``degree`` curves containing all frame lines."""
    if degree < 3:
        return []
    abc = frame_product_curve(frame)
    return [abc * HomCurve.from_terms(degree - 3, {m: 1}) for m in monomials(degree - 3)]


def curve_beyond_frame(points: Iterable, degree: int, frame: TriFrame) -> HomCurve | None:
    """A curve through the points that is not a multiple of ``a*b*c``, or None."""
    multiples = [m.coeffs for m in frame_multiples(frame, degree)]
    for C in fit_curves(points, degree):
        if not in_span(multiples, C.coeffs):
            return C
    return None


def conic_determinant(points: Sequence) -> Fraction:
    points = as_points(points)
    if len(points) != 6:
        raise ValueError("need exactly six points")
    return mat_det(evaluation_matrix(points, 2))


def _no_three_collinear(points: Sequence[ProjPoint]) -> bool:
    n = len(points)
    return not any(
        collinear(points[i], points[j], points[k])
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def pairing_product(points: Sequence) -> Fraction | None:
    """Conic criterion via characteristic ratios.

    With ``a = (p1, p2)``, ``b = (p3, p4)``, ``c = (p5, p6)`` the six points lie
    on a conic iff ``[u,v;p1,p2] * [v,w;p3,p4] * [w,u;p5,p6] == 1``. Returns the
    product, or None when the pairing does not form a frame.
    """
    p = as_points(points)
    if not _no_three_collinear(p):
        return None
    try:
        frame = TriFrame(join(p[0], p[1]), join(p[2], p[3]), join(p[4], p[5]))
    except GeometryError:
        return None
    return frame_ratio_product(frame, p[0:2], p[2:4], p[4:6])


def conic_through_six(points: Sequence) -> bool:
    """Whether six points lie on a common conic (6x6 determinant test).

    When the points pair up into a frame, the characteristic-ratio criterion
    is evaluated too and must agree.
    """
    on_conic = conic_determinant(points) == 0
    product = pairing_product(points)
    if product is not None and (product == 1) != on_conic:
        raise RuntimeError(f"conic criteria disagree: determinant says {on_conic}, product is {product}")
    return on_conic


def tangent_line(C: HomCurve, p: Sequence) -> ProjLine:
    """Tangent at a smooth point: the gradient as line coefficients."""
    if evaluate(C, p) != 0:
        raise GeometryError("point not on curve")
    g = gradient(C, p)
    if not any(g):
        raise GeometryError("singular point")
    return ProjLine(integer_primitive(g))


def is_flex(C: HomCurve, p: Sequence) -> bool:
    """Whether a smooth point of the curve is an inflection point (Hessian vanishes)."""
    tangent_line(C, p)
    return hessian_det(C, p) == 0


def line_residual(C: HomCurve, line: ProjLine, known: Sequence[tuple[ProjPoint, int]]) -> ProjPoint:
    """Last intersection of ``line`` with ``C`` after removing known roots.

    ``known`` lists intersection points with their multiplicities; together
    they must account for ``degree - 1`` roots.
    """
    if sum(m for _, m in known) != C.degree - 1:
        raise ValueError("known roots must leave exactly one residual intersection")
    base = known[0][0]
    other = next(q for q in points_on_line(line) if q != base)
    g = restrict_to_line(C, base, other)
    if g.is_zero():
        raise GeometryError("line is a component of the curve")
    for pt, mult in known:
        d = decompose(pt, base, other)
        for _ in range(mult):
            g = g.divide_root(d.alpha, d.beta)
    s, t = g.linear_root()
    return ProjPoint(tuple(s * a + t * b for a, b in zip(base.coords, other.coords))).canonical()
