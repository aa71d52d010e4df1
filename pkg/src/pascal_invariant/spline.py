"""Singularity of spline spaces on Morgan-Scott type triangulations.

The inner triangle has edge lines ``u, v, w``; its vertex ``u ^ v`` carries the
interior edges ``l_i = a_i u + b_i v`` (``mu + 1`` of them), ``v ^ w`` carries
``a_j v + b_j w`` and ``w ^ u`` carries ``a_k w + b_k u``. The space
``S^mu_{mu+1}`` has dimension ``C(mu+3, 2) + tau`` where ``tau`` is the
dimension of the solution space of the conformality conditions

    sum_i  lam_i l_i^(mu+1) + lam_u u^(mu+1) + lam_v v^(mu+1) = 0
    sum_j  lam_j l_j^(mu+1) - lam_v v^(mu+1) + lam_w w^(mu+1) = 0
    sum_k  lam_k l_k^(mu+1) - lam_w w^(mu+1) - lam_u u^(mu+1) = 0

``mu = 0`` gives continuous piecewise linear splines on the triangle-in-
triangle partition with a single edge per inner vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from .curves import HomCurve, monomial_count
from .exact import RatMatrix, as_rational, mat_rank
from .projective import (
    GeometryError,
    ProjLine,
    ProjPoint,
    TriFrame,
    as_points,
    check_representatives,
    collinear,
    combine,
    concurrent,
    decompose,
    dual,
    join,
)


class BridgeViolation(RuntimeError):
    """Full and reduced conformality systems report different nullities."""


def _as_line(x) -> ProjLine:
    return x if isinstance(x, ProjLine) else ProjLine(x)


@dataclass(frozen=True, init=False)
class MSConfig:
    mu: int
    u: ProjLine
    v: ProjLine
    w: ProjLine
    edge_coeffs: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, mu: int, u, v, w, edge_coeffs):
        if mu < 0:
            raise ValueError("smoothness must be non-negative")
        u, v, w = _as_line(u), _as_line(v), _as_line(w)
        if u == v or v == w or w == u or concurrent(u, v, w):
            raise GeometryError("inner edge lines must be distinct with no common point")
        pairs = tuple((as_rational(a), as_rational(b)) for a, b in edge_coeffs)
        if len(pairs) != 3 * mu + 3:
            raise ValueError(f"mu = {mu} needs {3 * mu + 3} edges, got {len(pairs)}")
        for a, b in pairs:
            if a == 0 and b == 0:
                raise GeometryError("edge coefficients (0, 0) do not define a line")
        g = mu + 1
        for k in range(3):
            group = pairs[k * g:(k + 1) * g]
            for i in range(g):
                for j in range(i + 1, g):
                    (a1, b1), (a2, b2) = group[i], group[j]
                    if a1 * b2 == a2 * b1:
                        raise GeometryError("two edges of one pencil coincide")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "edge_coeffs", pairs)

    @classmethod
    def from_edge_lines(cls, mu: int, u, v, w, edges: Sequence) -> "MSConfig":
        """Recover pencil coefficients of explicit edge lines (grouped by vertex)."""
        u, v, w = _as_line(u), _as_line(v), _as_line(w)
        g = mu + 1
        edges = [_as_line(e) for e in edges]
        if len(edges) != 3 * g:
            raise ValueError(f"mu = {mu} needs {3 * g} edges")
        pairs = []
        for k, (p, q) in enumerate(((u, v), (v, w), (w, u))):
            for e in edges[k * g:(k + 1) * g]:
                d = decompose(e, p, q)
                pairs.append((d.alpha, d.beta))
        return cls(mu, u, v, w, pairs)

    @property
    def pencils(self) -> tuple[tuple[ProjLine, ProjLine], ...]:
        return (self.u, self.v), (self.v, self.w), (self.w, self.u)

    def edges(self) -> list[ProjLine]:
        g = self.mu + 1
        out = []
        for k, (p, q) in enumerate(self.pencils):
            for a, b in self.edge_coeffs[k * g:(k + 1) * g]:
                out.append(combine(a, p, b, q))
        return out

    def generic_dim(self) -> int:
        return comb(self.mu + 3, 2)


def _power_coeffs(line: ProjLine, k: int) -> tuple[Fraction, ...]:
    return (HomCurve.from_line(line) ** k).coeffs


def conformality_matrix(cfg: MSConfig) -> RatMatrix:
    """Global conformality system; columns are the edge multipliers then ``lam_u, lam_v, lam_w``."""
    k = cfg.mu + 1
    g = k
    N = monomial_count(k)
    edge_cols = [_power_coeffs(e, k) for e in cfg.edges()]
    U, V, W = (_power_coeffs(l, k) for l in (cfg.u, cfg.v, cfg.w))
    zero = (Fraction(0),) * N
    # vertex-line columns per block (lam_u, lam_v, lam_w), signs as in the system above
    blocks = (
        (U, V, zero),
        (zero, tuple(-x for x in V), W),
        (tuple(-x for x in U), zero, tuple(-x for x in W)),
    )
    ncols = 3 * g + 3
    rows = []
    for b, vertex_cols in enumerate(blocks):
        for r in range(N):
            row = [Fraction(0)] * ncols
            for i in range(b * g, (b + 1) * g):
                row[i] = edge_cols[i][r]
            for j, col in enumerate(vertex_cols):
                row[3 * g + j] = col[r]
            rows.append(row)
    return RatMatrix(rows, ncols)


def reduced_matrix(cfg: MSConfig) -> RatMatrix:
    """Coefficient matrix of ``sum_i lam_i l_i^(mu+1) = 0`` over all edges."""
    k = cfg.mu + 1
    cols = [_power_coeffs(e, k) for e in cfg.edges()]
    return RatMatrix(list(zip(*cols)), len(cols))


def nullity(M: RatMatrix) -> int:
    return M.ncols - mat_rank(M)


@dataclass(frozen=True)
class SplineDimReport:
    generic_dim: int
    tau: int
    total_dim: int
    singular: bool


def spline_dim(cfg: MSConfig) -> SplineDimReport:
    """Dimension of ``S^mu_{mu+1}`` over the configuration."""
    tau = nullity(conformality_matrix(cfg))
    if tau != nullity(reduced_matrix(cfg)):
        raise BridgeViolation("conformality bridge violated")
    generic = cfg.generic_dim()
    return SplineDimReport(generic, tau, generic + tau, tau > 0)


def pencil_product(cfg: MSConfig) -> Fraction:
    """Product of ``a_i / b_i`` over all edges."""
    for a, b in cfg.edge_coeffs:
        if a == 0 or b == 0:
            raise GeometryError("edge through opposite vertex")
    return prod((a / b for a, b in cfg.edge_coeffs), start=Fraction(1))


def product_criterion(cfg: MSConfig) -> bool:
    """Algebraic singularity test: the pencil product equals ``(-1)^(mu+1)``."""
    return pencil_product(cfg) == (-1) ** (cfg.mu + 1)


_AXES = (ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1))


def s10_dim(edge_coeffs: Sequence, u=None, v=None, w=None) -> int:
    """Dimension of continuous piecewise linears with one edge per inner vertex.

    Either 3 or 4; 4 exactly when the product of ``b_i / a_i`` is ``-1``.
    """
    u, v, w = (x if x is not None else d for x, d in zip((u, v, w), _AXES))
    cfg = MSConfig(0, u, v, w, edge_coeffs)
    tau = nullity(conformality_matrix(cfg))
    if (tau > 0) != product_criterion(cfg):
        raise BridgeViolation("rank and product criterion disagree")
    return cfg.generic_dim() + tau


def dual_config(frame: TriFrame, points_on_a, points_on_b, points_on_c, vertices=None) -> MSConfig:
    """Morgan-Scott configuration dual to points on the three frame lines.

    Frame vertices become the inner edge lines and each point becomes an
    interior edge with the same pencil coefficients.
    """
    groups = [as_points(g) for g in (points_on_a, points_on_b, points_on_c)]
    n = len(groups[0])
    if n < 1 or any(len(g) != n for g in groups):
        raise ValueError("need the same number of points on each frame line")
    verts = frame.vertices if vertices is None else check_representatives(frame.vertices, vertices)
    pairs = []
    for (p, q), group in zip(frame.sides(verts), groups):
        for pt in group:
            d = decompose(pt, p, q)
            pairs.append((d.alpha, d.beta))
    u, v, w = (dual(x) for x in verts)
    return MSConfig(n - 1, u, v, w, pairs)


def dual_points(cfg: MSConfig) -> list[ProjPoint]:
    """Interior edges seen as points (coefficient triples)."""
    return [dual(e) for e in cfg.edges()]


def ms_config_from_vertices(outer: Sequence, inner: Sequence) -> MSConfig:
    """Morgan-Scott (``mu = 1``) configuration from triangle vertices.

    ``outer = (A, B, C)``, ``inner = (a, b, c)``. Each inner vertex is joined
    to the two outer vertices it does not correspond to (``a`` to ``B`` and
    ``C``, and so on), so ``Aa``, ``Bb``, ``Cc`` are not edges.
    """
    A, B, C = as_points(outer)
    a, b, c = as_points(inner)
    if collinear(A, B, C) or collinear(a, b, c):
        raise GeometryError("degenerate triangle")
    for X, Y in ((A, b), (A, c), (B, a), (B, c), (C, a), (C, b)):
        if X == Y:
            raise GeometryError("degenerate triangle")
    u, v, w = join(b, c), join(c, a), join(a, b)
    # u ^ v = c, v ^ w = a, w ^ u = b
    edges = [join(c, A), join(c, B), join(a, B), join(a, C), join(b, C), join(b, A)]
    return MSConfig.from_edge_lines(1, u, v, w, edges)


def ms_geometric_check(outer: Sequence, inner: Sequence) -> bool:
    """Whether ``Aa``, ``Bb``, ``Cc`` are concurrent; cross-checked against the rank."""
    cfg = ms_config_from_vertices(outer, inner)
    A, B, C = as_points(outer)
    a, b, c = as_points(inner)
    result = concurrent(join(A, a), join(B, b), join(C, c))
    if spline_dim(cfg).singular != result:
        raise BridgeViolation("geometric and algebraic singularity tests disagree")
    return result
