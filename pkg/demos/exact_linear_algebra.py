"""
Exact rank and nullspace
========================

Every matrix entry is a Fraction, so rank decisions never depend on a
tolerance.
"""

from fractions import Fraction

from pascal_invariant.curves import evaluation_matrix
from pascal_invariant.exact import RatMatrix, mat_det, mat_nullspace, mat_rank
from pascal_invariant.worked_example import POINTS

# a matrix whose third row is (1/3) * first + (2/3) * second
M = RatMatrix([[1, 2, 3], [4, 5, 6], [3, 4, 5]])
print("rank", mat_rank(M), "det", mat_det(M))
print("kernel", [tuple(map(str, v)) for v in mat_nullspace(M)])

# perturbing one entry by 1/10**30 is still seen exactly
M2 = RatMatrix([[1, 2, 3], [4, 5, 6], [3, 4, 5 + Fraction(1, 10**30)]])
print("rank after tiny change", mat_rank(M2))

# nine points of a cubic against the ten cubic monomials
E = evaluation_matrix(POINTS, 3)
print("evaluation matrix", E.shape, "rank", mat_rank(E))
