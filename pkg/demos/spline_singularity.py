"""
When does a spline space jump in dimension?
===========================================

On a triangle inside a triangle, C^mu splines of degree mu + 1 normally have
dimension C(mu + 3, 2). The dimension grows by one exactly when the product
of the pencil coefficients of the interior edges equals (-1)^(mu + 1). Points
on three lines lying on a curve give, by duality, exactly such a configuration.
"""

import random
from fractions import Fraction

from pascal_invariant.generators import perturb_nine_point, random_ms_config, random_nine_point_on_cubic
from pascal_invariant.projective import ProjPoint
from pascal_invariant.spline import (
    MSConfig,
    dual_config,
    ms_geometric_check,
    pencil_product,
    s10_dim,
    spline_dim,
)

axes = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
generic = MSConfig(1, *axes, [(r, 1) for r in (1, 2, 3, 5, 7, 11)])
special = MSConfig(1, *axes, [(r, 1) for r in (1, 2, 3, Fraction(1, 2), Fraction(1, 3), 1)])
for cfg in (generic, special):
    print("product", pencil_product(cfg), "->", spline_dim(cfg))

rng = random.Random(2)
for mu in (1, 2, 3):
    cfgs = [random_ms_config(rng, mu, singular=bool(i % 2)) for i in range(20)]
    print(f"mu={mu}: dims {sorted({spline_dim(c).total_dim for c in cfgs})}")

print("continuous linears:", s10_dim([(1, 1), (1, 1), (1, -1)]), s10_dim([(1, 1), (1, 1), (1, 1)]))

outer = (ProjPoint(0, 0, 1), ProjPoint(12, 0, 1), ProjPoint(0, 12, 1))
inner = (ProjPoint(3, 3, 1), ProjPoint(6, 3, 1), ProjPoint(3, 6, 1))
print("connectors concurrent:", ms_geometric_check(outer, inner))

cfg, _ = random_nine_point_on_cubic(rng)
for nine in (cfg, perturb_nine_point(rng, cfg)):
    dual = dual_config(nine.frame, nine.points_on_a, nine.points_on_b, nine.points_on_c)
    print("dual of nine points:", spline_dim(dual))
