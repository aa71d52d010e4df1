"""
From nine points of a cubic to a conic
======================================

A cubic cut by three lines gives nine points. The Pascal mapping of six of
them, together with the remaining three, lies on a conic. This script redoes
the full computation for one cubic and writes a drawing.
"""

import random
from pathlib import Path

from pascal_invariant.cli import example_figure
from pascal_invariant.generators import perturb_nine_point, random_nine_point_on_cubic
from pascal_invariant.pascal import CriterionError, pascal_type_cubic
from pascal_invariant.render import render_svg
from pascal_invariant.worked_example import reproduce

r = reproduce()
print("cubic:", r["cubic"])
for name in ("vertices", "q", "chi"):
    print(f"{name}:", r[name])
print("conic:", r["conic"].canonical())

# the same on a random configuration, and the failure when one point moves
rng = random.Random(3)
cfg, cubic = random_nine_point_on_cubic(rng)
print("random cubic:", cubic.canonical())
print("conic through the images:", pascal_type_cubic(cfg).curve.canonical())
try:
    pascal_type_cubic(perturb_nine_point(rng, cfg))
except CriterionError as exc:
    print("moved point:", exc)

fig = example_figure()
out = Path("cubic_nine_points.svg")
out.write_text(render_svg(fig["window"], fig["points"], fig["lines"], fig["curves"], fig["labels"]))
print("wrote", out)
