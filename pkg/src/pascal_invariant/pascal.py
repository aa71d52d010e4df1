"""Characteristic mapping, the Pascal mapping and Pascal-type theorem checks.

For a hexagon ``p1..p6`` the opposite sides meet in

    q1 = (p1p2) ^ (p4p5),  q2 = (p2p3) ^ (p5p6),  q3 = (p3p4) ^ (p6p1)

and the vertices are ``u = (p1p2) ^ (p5p6)``, ``v = (p1p2) ^ (p3p4)``,
``w = (p3p4) ^ (p5p6)``. The Pascal mapping sends the hexagon to
``chi_(u,v)(q1), chi_(w,u)(q2), chi_(v,w)(q3)``, where ``chi_(u,v)`` swaps the
two coefficients of ``q = alpha*u + beta*v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .curves import (
    Degenerate,
    HomCurve,
    char_ratio_points,
    conic_through_six,
    curve_beyond_frame,
    evaluate,
    fit_curves,
    frame_ratio_product,
    is_flex,
    line_residual,
    tangent_line,
)
from .projective import (
    GeometryError,
    ProjLine,
    ProjPoint,
    TriFrame,
    as_points,
    check_representatives,
    collinear,
    combine,
    decompose,
    join,
    meet,
)


class CriterionError(GeometryError):
    """The characteristic-ratio precondition of a theorem fails."""

    def __init__(self, message: str, product):
        super().__init__(f"{message} (product = {product})")
        self.product = product


def char_map(q: ProjPoint, u: ProjPoint, v: ProjPoint) -> ProjPoint:
    """``chi_(u,v)(q)``: for ``q = alpha*u + beta*v`` return ``beta*u + alpha*v``.

    Depends on the representatives of ``u`` and ``v`` (only through the square
    of their relative scale) and is an involution.
    """
    d = decompose(q, u, v)
    if d.alpha == 0 or d.beta == 0:
        raise GeometryError("basis point has no finite image")
    return combine(d.beta, u, d.alpha, v).canonical()


@dataclass(frozen=True, init=False)
class HexConfig:
    """Ordered six points, no three collinear, with their Pascal vertices."""

    points: tuple[ProjPoint, ...]
    u: ProjPoint
    v: ProjPoint
    w: ProjPoint

    def __init__(self, points: Sequence):
        pts = tuple(as_points(points))
        if len(pts) != 6:
            raise ValueError("a hexagon needs six points")
        for i, j, k in combinations(range(6), 3):
            if pts[i] == pts[j] or pts[j] == pts[k] or pts[i] == pts[k]:
                raise GeometryError(f"points p{i + 1}, p{j + 1}, p{k + 1} are not distinct")
            if collinear(pts[i], pts[j], pts[k]):
                raise GeometryError(f"points p{i + 1}, p{j + 1}, p{k + 1} are collinear")
        a, b, c = join(pts[0], pts[1]), join(pts[2], pts[3]), join(pts[4], pts[5])
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "u", meet(a, c))
        object.__setattr__(self, "v", meet(a, b))
        object.__setattr__(self, "w", meet(b, c))

    @property
    def vertices(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return self.u, self.v, self.w

    def frame(self) -> TriFrame:
        p = self.points
        return TriFrame(join(p[0], p[1]), join(p[2], p[3]), join(p[4], p[5]))


def phi_hexagon(hex: HexConfig) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    """Intersections of the three pairs of opposite sides."""
    p1, p2, p3, p4, p5, p6 = hex.points
    out = []
    for (a, b), (c, d) in (((p1, p2), (p4, p5)), ((p2, p3), (p5, p6)), ((p3, p4), (p6, p1))):
        try:
            out.append(meet(join(a, b), join(c, d)))
        except GeometryError:
            raise GeometryError("coincident opposite sides") from None
    return tuple(out)


def pascal_mapping(hex: HexConfig, vertices: Sequence | None = None) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    """``(chi_(u,v)(q1), chi_(w,u)(q2), chi_(v,w)(q3))``.

    ``vertices`` overrides the canonical representatives of ``u, v, w``.
    """
    u, v, w = hex.vertices if vertices is None else check_representatives(hex.vertices, vertices)
    q1, q2, q3 = phi_hexagon(hex)
    return char_map(q1, u, v), char_map(q2, w, u), char_map(q3, v, w)


def _psi_line_product(hex: HexConfig, images, vertices=None):
    u, v, w = hex.vertices if vertices is None else vertices
    r1 = char_ratio_points(u, v, [images[0]])
    r2 = char_ratio_points(w, u, [images[1]])
    r3 = char_ratio_points(v, w, [images[2]])
    if any(isinstance(r, Degenerate) for r in (r1, r2, r3)):
        return None
    return r1 * r2 * r3


def verify_pascal(hex: HexConfig) -> bool:
    """Whether the three Pascal-mapping images are collinear.

    The collinearity is cross-checked against the ratio criterion for three
    points on the frame sides (product ``-1``), and against the conic test.
    """
    images = pascal_mapping(hex)
    on_line = collinear(*images)
    product = _psi_line_product(hex, images)
    if product is not None and (product == -1) != on_line:
        raise RuntimeError(f"collinearity and ratio product {product} disagree")
    if conic_through_six(hex.points) and not on_line:
        raise RuntimeError("hexagon on a conic but its Pascal images are not collinear")
    return on_line


@dataclass(frozen=True, init=False)
class NinePointConfig:
    """Three points on each frame line.

    Labels follow ``{p1, p2, p7}`` on ``a``, ``{p3, p4, p8}`` on ``b`` and
    ``{p5, p6, p9}`` on ``c``; ``p1..p6`` form the hexagon.
    """

    frame: TriFrame
    points_on_a: tuple[ProjPoint, ...]
    points_on_b: tuple[ProjPoint, ...]
    points_on_c: tuple[ProjPoint, ...]

    def __init__(self, frame: TriFrame, points_on_a, points_on_b, points_on_c):
        groups = [tuple(as_points(g)) for g in (points_on_a, points_on_b, points_on_c)]
        for name, line, group in zip("abc", frame.lines, groups):
            if len(group) != 3:
                raise ValueError(f"line {name} needs exactly three points")
            _check_on_line(name, line, group, frame)
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "points_on_a", groups[0])
        object.__setattr__(self, "points_on_b", groups[1])
        object.__setattr__(self, "points_on_c", groups[2])
        HexConfig(self.hexagon_points())

    def hexagon_points(self) -> tuple[ProjPoint, ...]:
        a, b, c = self.points_on_a, self.points_on_b, self.points_on_c
        return a[0], a[1], b[0], b[1], c[0], c[1]

    def residual_points(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return self.points_on_a[2], self.points_on_b[2], self.points_on_c[2]

    def all_points(self) -> tuple[ProjPoint, ...]:
        """``p1 .. p9`` in label order."""
        return self.hexagon_points() + self.residual_points()


def _check_on_line(name, line: ProjLine, group, frame: TriFrame):
    for p in group:
        if not p.on(line):
            raise GeometryError(f"point {p} is not on line {name}")
        if p in frame.vertices:
            raise GeometryError(f"point {p} is a frame vertex")
    if len(set(group)) != len(group):
        raise GeometryError(f"points on line {name} are not distinct")


@dataclass(frozen=True)
class PascalTypeResult:
    points: tuple[ProjPoint, ...]
    curve: HomCurve | None
    input_criterion: bool = True
    output_criterion: bool = True
    input_curve: HomCurve | None = None

    def __iter__(self):
        return iter((self.points, self.curve))


def pascal_type_cubic(cfg: NinePointConfig, vertices: Sequence | None = None) -> PascalTypeResult:
    """Pascal images of ``p1..p6`` plus ``p7, p8, p9`` and the conic through them.

    Requires the nine points to lie on a cubic other than ``a*b*c``, checked
    through ``[u,v;p1,p2,p7] * [v,w;p3,p4,p8] * [w,u;p5,p6,p9] == -1``.
    """
    frame = cfg.frame
    if vertices is not None:
        vertices = check_representatives(frame.vertices, vertices)
    product = frame_ratio_product(frame, cfg.points_on_a, cfg.points_on_b, cfg.points_on_c, vertices)
    if product != -1:
        raise CriterionError("points not on a cubic", product)
    images = pascal_mapping(HexConfig(cfg.hexagon_points()), vertices)
    six = images + cfg.residual_points()
    basis = fit_curves(six, 2)
    return PascalTypeResult(six, basis[0] if basis else None)


def pascal_type_general(frame: TriFrame, points_on_a, points_on_b, points_on_c) -> PascalTypeResult:
    """Reduce ``n`` points per frame line to ``n - 1`` per line via the Pascal mapping.

    The hexagon is made of the first two listed points on each line. Output
    points are ordered: line ``a`` (image, then the remaining inputs), line
    ``b``, line ``c``. ``curve`` is a degree ``n - 1`` curve through them that
    is not a multiple of ``a*b*c``, or None.
    """
    groups = [tuple(as_points(g)) for g in (points_on_a, points_on_b, points_on_c)]
    n = len(groups[0])
    if n < 2 or any(len(g) != n for g in groups):
        raise ValueError("need the same number n >= 2 of points on each line")
    for name, line, group in zip("abc", frame.lines, groups):
        _check_on_line(name, line, group, frame)
    a, b, c = groups
    try:
        hex = HexConfig((a[0], a[1], b[0], b[1], c[0], c[1]))
    except GeometryError:
        raise GeometryError("pick different six") from None
    chi1, chi2, chi3 = pascal_mapping(hex)
    out_a, out_b, out_c = (chi1,) + a[2:], (chi3,) + b[2:], (chi2,) + c[2:]

    before = frame_ratio_product(frame, a, b, c)
    after = frame_ratio_product(frame, out_a, out_b, out_c)
    input_ok = before == (-1) ** n
    output_ok = after == (-1) ** (n - 1)
    if before is not None and after is not None and input_ok != output_ok:
        raise RuntimeError(f"ratio criteria disagree: input {before}, output {after}")
    points = out_a + out_b + out_c
    return PascalTypeResult(
        points,
        curve_beyond_frame(points, n - 1, frame),
        input_criterion=input_ok,
        output_criterion=output_ok,
        input_curve=curve_beyond_frame(a + b + c, n, frame),
    )


def _require_cubic(C: HomCurve):
    if C.degree != 3:
        raise ValueError("a cubic curve is required")


def tangent_residual(C: HomCurve, p: ProjPoint) -> ProjPoint:
    """Third intersection of the cubic with its tangent at ``p``."""
    t = tangent_line(C, p)
    return line_residual(C, t, [(p, 2)])


def third_intersection(C: HomCurve, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Third intersection of the cubic with the line through two of its points."""
    _require_cubic(C)
    for pt in (p, q):
        if evaluate(C, pt) != 0:
            raise GeometryError("point not on curve")
    return line_residual(C, join(p, q), [(p, 1), (q, 1)])


def _distinct(points: Sequence[ProjPoint]):
    if len(set(points)) != len(points):
        raise GeometryError("points must be distinct")


def residual_tangent_collinear(C: HomCurve, line: ProjLine, ps: Sequence) -> bool:
    """Collinearity of the residual tangent intersections at three points of a line."""
    _require_cubic(C)
    ps = as_points(ps)
    if len(ps) != 3:
        raise ValueError("need three points")
    _distinct(ps)
    for p in ps:
        if not p.on(line):
            raise GeometryError(f"point {p} is not on the given line")
        if evaluate(C, p) != 0:
            raise GeometryError(f"point {p} not on curve")
    residuals = [tangent_residual(C, p) for p in ps]
    return collinear(*residuals)


def flexes_collinear(C: HomCurve, p1, p2, p3) -> bool:
    """Collinearity of three flexes of a cubic."""
    _require_cubic(C)
    ps = as_points((p1, p2, p3))
    _distinct(ps)
    for p in ps:
        if not is_flex(C, p):
            raise GeometryError(f"point {p} is not a flex")
    return collinear(*ps)


def conic_tangency_residuals_collinear(C: HomCurve, D: HomCurve, ps: Sequence) -> bool:
    """Collinearity of residual tangent intersections where a conic touches a cubic."""
    _require_cubic(C)
    if D.degree != 2:
        raise ValueError("a conic is required")
    ps = as_points(ps)
    if len(ps) != 3:
        raise ValueError("need three points")
    _distinct(ps)
    for p in ps:
        try:
            same = tangent_line(C, p) == tangent_line(D, p)
        except GeometryError:
            same = False
        if not same:
            raise GeometryError("not a tangential contact")
    return collinear(*(tangent_residual(C, p) for p in ps))
