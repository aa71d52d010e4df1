"""
Characteristic number of a curve over three lines
=================================================

A degree-n curve meets each side of a triangle of lines in n points.
Writing each point as ``alpha*u + beta*v`` in the two vertices of its side and
multiplying all the ratios ``beta/alpha`` around the triangle always gives
``(-1)^n``. The intersections may be irrational; the product is computed from
the curve's values at the vertices alone.
"""

import random

from pascal_invariant.curves import char_number, char_ratio_curve_line, char_ratio_points
from pascal_invariant.generators import random_curve_frame
from pascal_invariant.worked_example import CUBIC, FRAME, POINTS, VERTICES

# explicit rational intersections on line a, with the vertex signs (0,-1,0), (-1,1,1)
u, v = VERTICES[0], VERTICES[1]
print("from the points:", char_ratio_points(u, v, [POINTS[0], POINTS[1], POINTS[6]]))
print("from the curve :", char_ratio_curve_line(CUBIC, u, v))
print("around the triangle:", char_number(CUBIC, FRAME))

# random curves and random triangles of every degree up to 6
rng = random.Random(0)
for n in range(1, 7):
    values = {char_number(*random_curve_frame(rng, n)) for _ in range(25)}
    print(f"degree {n}: {sorted(values)}")
