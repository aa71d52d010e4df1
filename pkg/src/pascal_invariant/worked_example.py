"""A cubic cut by three lines in nine rational points, with every intermediate value.

The cubic is

    -1120x^3 + 560x^2y - 60xy^2 + 1008y^3 - 450xyz + 1200y^2z + 580xz^2
        - 1514yz^2 - 729z^3

and the lines are ``a: x + z``, ``b: -y + z``, ``c: -x + z``.
"""
from __future__ import annotations

from fractions import Fraction as F

from .curves import HomCurve, char_number
from .pascal import HexConfig, NinePointConfig, pascal_mapping, pascal_type_cubic, phi_hexagon
from .projective import ProjLine, ProjPoint, TriFrame

CUBIC = HomCurve.from_terms(
    3,
    {
        (3, 0, 0): -1120,
        (2, 1, 0): 560,
        (1, 2, 0): -60,
        (0, 3, 0): 1008,
        (1, 1, 1): -450,
        (0, 2, 1): 1200,
        (1, 0, 2): 580,
        (0, 1, 2): -1514,
        (0, 0, 3): -729,
    },
)

LINE_A = ProjLine(1, 0, 1)
LINE_B = ProjLine(0, -1, 1)
LINE_C = ProjLine(-1, 0, 1)
FRAME = TriFrame(LINE_A, LINE_B, LINE_C)

# p1..p9; {p1, p2, p7} on a, {p3, p4, p8} on b, {p5, p6, p9} on c
POINTS = (
    ProjPoint(-4, -1, 4),
    ProjPoint(-1, F(-3, 2), 1),
    ProjPoint(F(1, 4), 1, 1),
    ProjPoint(F(-1, 4), 1, 1),
    ProjPoint(1, F(-3, 2), 1),
    ProjPoint(1, F(-3, 4), 1),
    ProjPoint(2, -1, -2),
    ProjPoint(F(1, 2), 1, 1),
    ProjPoint(1, F(47, 42), 1),
)

# the same vertices with the sign choices used in the original computation
VERTICES = (ProjPoint(0, -1, 0), ProjPoint(-1, 1, 1), ProjPoint(1, 1, 1))

OPPOSITE_SIDE_POINTS = (ProjPoint(-1, F(5, 2), 1), ProjPoint(1, F(5, 2), 1), ProjPoint(-6, 1, 1))
PASCAL_IMAGES = (ProjPoint(-1, F(5, 3), 1), ProjPoint(1, F(5, 3), 1), ProjPoint(6, 1, 1))
CONIC = HomCurve.from_terms(
    2,
    {(2, 0, 0): 4, (1, 1, 0): 39, (0, 2, 0): -126, (1, 0, 1): -65, (0, 1, 1): 312, (0, 0, 2): -174},
)


def nine_point_config() -> NinePointConfig:
    p = POINTS
    return NinePointConfig(FRAME, (p[0], p[1], p[6]), (p[2], p[3], p[7]), (p[4], p[5], p[8]))


def reproduce() -> dict:
    """Recompute every intermediate object from the cubic and the three lines."""
    cfg = nine_point_config()
    hexagon = HexConfig(cfg.hexagon_points())
    result = pascal_type_cubic(cfg)
    return {
        "cubic": CUBIC,
        "frame": FRAME,
        "points": cfg.all_points(),
        "vertices": FRAME.vertices,
        "q": phi_hexagon(hexagon),
        "chi": pascal_mapping(hexagon),
        "conic_points": result.points,
        "conic": result.curve,
        "char_number": char_number(CUBIC, FRAME),
    }
