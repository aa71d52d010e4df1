"""Seeded random configurations with small rational coordinates.

Every generator takes a :class:`random.Random` so batches are reproducible.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .curves import (
    HomCurve,
    conic_determinant,
    contains_line,
    curve_beyond_frame,
    evaluate,
    fit_curves,
    frame_multiples,
    line_residual,
    monomial_count,
    points_on_line,
)
from .exact import in_span
from .pascal import HexConfig, NinePointConfig
from .projective import GeometryError, ProjLine, ProjPoint, TriFrame, combine, dual, meet
from .spline import MSConfig


def rand_rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def _triple(rng, bound):
    while True:
        t = tuple(rand_rational(rng, bound) for _ in range(3))
        if any(t):
            return t


def random_point(rng: random.Random, bound: int = 9) -> ProjPoint:
    return ProjPoint(_triple(rng, bound))


def random_line(rng: random.Random, bound: int = 9) -> ProjLine:
    return ProjLine(_triple(rng, bound))


def random_frame(rng: random.Random, bound: int = 9) -> TriFrame:
    while True:
        try:
            return TriFrame(random_line(rng, bound), random_line(rng, bound), random_line(rng, bound))
        except GeometryError:
            continue


def random_curve(rng: random.Random, degree: int, bound: int = 9) -> HomCurve:
    while True:
        coeffs = [rand_rational(rng, bound) for _ in range(monomial_count(degree))]
        if any(coeffs):
            return HomCurve(degree, tuple(coeffs))


def random_curve_frame(rng: random.Random, degree: int, bound: int = 9) -> tuple[HomCurve, TriFrame]:
    """A curve and a frame with no vertex on the curve and no frame line in it."""
    while True:
        C, frame = random_curve(rng, degree, bound), random_frame(rng, bound)
        if any(evaluate(C, v) == 0 for v in frame.vertices):
            continue
        if any(contains_line(C, l) for l in frame.lines):
            continue
        return C, frame


def random_point_on_line(rng: random.Random, line: ProjLine, exclude=(), bound: int = 9) -> ProjPoint:
    p, q = points_on_line(line)
    while True:
        s, t = rand_rational(rng, bound), rand_rational(rng, bound)
        if s == 0 and t == 0:
            continue
        pt = combine(s, p, t, q)
        if pt not in exclude:
            return pt


def random_points_on_frame(rng: random.Random, frame: TriFrame, n: int, bound: int = 9):
    """``n`` distinct non-vertex points on each frame line."""
    taken = set(frame.vertices)
    groups = []
    for line in frame.lines:
        group = []
        for _ in range(n):
            pt = random_point_on_line(rng, line, taken, bound)
            taken.add(pt)
            group.append(pt)
        groups.append(group)
    return groups


def _valid_nine(frame, groups) -> NinePointConfig | None:
    try:
        return NinePointConfig(frame, *groups)
    except GeometryError:
        return None


def random_nine_point_on_cubic(rng: random.Random, bound: int = 9) -> tuple[NinePointConfig, HomCurve]:
    """Nine frame points cut out by a cubic other than ``a*b*c``.

    Eight points are chosen freely; the pencil of cubics through them contains
    ``a*b*c`` and one other cubic, whose last intersection with ``c`` is ``p9``.
    """
    while True:
        frame = random_frame(rng, bound)
        a, b, c = random_points_on_frame(rng, frame, 3, bound)
        c = c[:2]
        multiples = [m.coeffs for m in frame_multiples(frame, 3)]
        cubic = next((C for C in fit_curves(a + b + c, 3) if not in_span(multiples, C.coeffs)), None)
        if cubic is None or contains_line(cubic, frame.c):
            continue
        try:
            p9 = line_residual(cubic, frame.c, [(c[0], 1), (c[1], 1)])
        except GeometryError:
            continue
        if p9 in frame.vertices or p9 in c:
            continue
        cfg = _valid_nine(frame, (a, b, c + [p9]))
        if cfg is not None:
            return cfg, cubic


def random_nine_point_generic(rng: random.Random, bound: int = 9) -> NinePointConfig:
    """Nine frame points with no constraint (almost never on a cubic)."""
    while True:
        frame = random_frame(rng, bound)
        cfg = _valid_nine(frame, random_points_on_frame(rng, frame, 3, bound))
        if cfg is not None:
            return cfg


def perturb_nine_point(rng: random.Random, cfg: NinePointConfig, bound: int = 9) -> NinePointConfig:
    """Move ``p9`` along line ``c`` to a fresh random position off the cubic."""
    while True:
        taken = set(cfg.all_points()) | set(cfg.frame.vertices)
        p9 = random_point_on_line(rng, cfg.frame.c, taken, bound)
        groups = (cfg.points_on_a, cfg.points_on_b, cfg.points_on_c[:2] + (p9,))
        new = _valid_nine(cfg.frame, groups)
        if new is not None and curve_beyond_frame(new.all_points(), 3, cfg.frame) is None:
            return new


def random_conic(rng: random.Random, bound: int = 5):
    """A random rational conic given by an invertible map of the unit circle.

    Returns ``(conic, sample)`` where ``sample(rng)`` draws a rational point on it.
    """
    while True:
        M = [[rand_rational(rng, bound) for _ in range(3)] for _ in range(3)]
        det = (
            M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
        )
        if det:
            break

    def image(p):
        return ProjPoint(tuple(sum(M[i][j] * p[j] for j in range(3)) for i in range(3)))

    def sample(r: random.Random) -> ProjPoint:
        s, t = rand_rational(r, 12), rand_rational(r, 12)
        if s == 0 and t == 0:
            s = Fraction(1)
        return image((s * s - t * t, 2 * s * t, s * s + t * t))

    five = []
    while len(five) < 5:
        p = sample(rng)
        if p not in five:
            five.append(p)
    return fit_curves(five, 2)[0], sample


def _hexagon(points) -> HexConfig | None:
    try:
        return HexConfig(points)
    except GeometryError:
        return None


def random_conic_hexagon(rng: random.Random) -> tuple[HexConfig, HomCurve]:
    """Six distinct rational points of a random conic, valid as a hexagon."""
    while True:
        conic, sample = random_conic(rng)
        pts = []
        while len(pts) < 6:
            p = sample(rng)
            if p not in pts:
                pts.append(p)
        hex = _hexagon(pts)
        if hex is not None:
            return hex, conic


def random_generic_hexagon(rng: random.Random, bound: int = 9) -> HexConfig:
    """Six random points in general position, not on any conic."""
    while True:
        pts = [random_point(rng, bound) for _ in range(6)]
        hex = _hexagon(pts)
        if hex is not None and conic_determinant(pts) != 0:
            return hex


def random_ms_config(rng: random.Random, mu: int, singular: bool | None = None, bound: int = 9) -> MSConfig:
    """Random pencils over random inner lines.

    With ``singular`` set, the last edge is adjusted so that the pencil
    product equals ``(-1)^(mu+1)`` (True) or differs from it (False).
    """
    target = Fraction((-1) ** (mu + 1))
    while True:
        frame = random_frame(rng, bound)
        pairs = [(rand_rational(rng, bound, True), rand_rational(rng, bound, True)) for _ in range(3 * mu + 3)]
        if singular is not None:
            partial = Fraction(1)
            for a, b in pairs[:-1]:
                partial *= a / b
            if singular:
                pairs[-1] = (target / partial, Fraction(1))
            elif partial * pairs[-1][0] / pairs[-1][1] == target:
                continue
        try:
            return MSConfig(mu, *frame.lines, pairs)
        except GeometryError:
            continue


def ms_dual_frame(cfg: MSConfig) -> TriFrame:
    """Frame whose vertices are dual to the inner edge lines ``u, v, w``.

    Line ``a`` of this frame is dual to ``u ^ v`` and so carries the points
    dual to the first pencil; likewise ``b`` for ``v ^ w`` and ``c`` for ``w ^ u``.
    """
    return TriFrame(*(dual(meet(p, q)) for p, q in cfg.pencils))
