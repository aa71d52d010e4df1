"""
Tangents and flexes of cubics
=============================

Collinear points of a cubic have collinear tangential residuals, and the line
through two flexes meets the cubic again in a flex. All residuals come from
exact division of the cubic restricted to a line.
"""

from pascal_invariant.curves import HomCurve, is_flex, tangent_line
from pascal_invariant.pascal import (
    flexes_collinear,
    residual_tangent_collinear,
    tangent_residual,
    third_intersection,
)
from pascal_invariant.projective import ProjPoint, join

nodal = HomCurve.from_terms(3, {(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})
p, q = ProjPoint(3, 6, 1), ProjPoint(8, 24, 1)
r = third_intersection(nodal, p, q)
print("third point on the chord:", r)
for pt in (p, q, r):
    print(" tangent at", pt, "->", tangent_line(nodal, pt), "meets the cubic again at", tangent_residual(nodal, pt))
print("residuals collinear:", residual_tangent_collinear(nodal, join(p, q), (p, q, r)))

fermat = HomCurve.from_terms(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): -1})
f1, f2 = ProjPoint(0, 1, 1), ProjPoint(1, 0, 1)
f3 = third_intersection(fermat, f1, f2)
print("third flex:", f3, is_flex(fermat, f3))
print("flexes collinear:", flexes_collinear(fermat, f1, f2, f3))
