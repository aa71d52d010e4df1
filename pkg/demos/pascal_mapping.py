"""
The Pascal mapping on conics
============================

Opposite sides of a hexagon meet in three points ``q1, q2, q3``. Swapping the
two coefficients of each ``q`` with respect to the hexagon's side vertices
gives three new points. For six points on a conic they are collinear; for
six points off every conic they are not.
"""

import random

from pascal_invariant.curves import conic_through_six
from pascal_invariant.generators import random_conic_hexagon, random_generic_hexagon
from pascal_invariant.pascal import HexConfig, pascal_mapping, phi_hexagon
from pascal_invariant.projective import ProjPoint, collinear

hexagon = HexConfig([ProjPoint(p) for p in [(3, 4, 5), (4, 3, 5), (0, 1, 1), (-3, 4, 5), (-4, -3, 5), (1, 0, 1)]])
print("on the unit circle:", conic_through_six(hexagon.points))
print("opposite sides meet at", phi_hexagon(hexagon))
images = pascal_mapping(hexagon)
print("images", images, "collinear:", collinear(*images))

rng = random.Random(1)
on = sum(collinear(*pascal_mapping(random_conic_hexagon(rng)[0])) for _ in range(50))
off = sum(collinear(*pascal_mapping(random_generic_hexagon(rng))) for _ in range(50))
print(f"collinear images: {on}/50 on conics, {off}/50 off conics")
