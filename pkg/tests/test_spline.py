import random
from fractions import Fraction as F

import pytest

from pascal_invariant.curves import (
    HomCurve,
    conic_through_six,
    evaluation_matrix,
    frame_product_curve,
    frame_ratio_product,
    monomials,
)
from pascal_invariant.exact import RatMatrix, mat_nullspace
from pascal_invariant.generators import (
    perturb_nine_point,
    random_conic_hexagon,
    random_generic_hexagon,
    random_ms_config,
    random_nine_point_on_cubic,
)
from pascal_invariant.projective import GeometryError, ProjLine, ProjPoint, TriFrame, join, meet
from pascal_invariant.spline import (
    MSConfig,
    conformality_matrix,
    dual_config,
    dual_points,
    ms_config_from_vertices,
    ms_geometric_check,
    nullity,
    pencil_product,
    product_criterion,
    reduced_matrix,
    s10_dim,
    spline_dim,
)
from pascal_invariant import worked_example as ex

AXES = (ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1))


def ratios_config(mu, ratios, lines=AXES):
    return MSConfig(mu, *lines, [(r, 1) for r in ratios])


def worked_dual():
    cfg = ex.nine_point_config()
    return dual_config(ex.FRAME, cfg.points_on_a, cfg.points_on_b, cfg.points_on_c)


class TestConfig:
    def test_edge_count(self):
        with pytest.raises(ValueError):
            ratios_config(1, [1, 2, 3])

    def test_repeated_edge(self):
        with pytest.raises(GeometryError):
            ratios_config(1, [1, 1, 2, 3, 4, 5])

    def test_concurrent_inner_lines(self):
        with pytest.raises(GeometryError):
            MSConfig(0, (1, 0, 0), (0, 1, 0), (1, 1, 0), [(1, 1)] * 3)

    def test_negative_smoothness(self):
        with pytest.raises(ValueError):
            MSConfig(-1, *AXES, [])

    def test_edges_pass_through_pencil_vertex(self):
        cfg = random_ms_config(random.Random(1), 2)
        g = cfg.mu + 1
        for k, (p, q) in enumerate(cfg.pencils):
            vertex = meet(p, q)
            for e in cfg.edges()[k * g:(k + 1) * g]:
                assert vertex.on(e)

    def test_from_edge_lines_round_trip(self):
        cfg = random_ms_config(random.Random(2), 1)
        again = MSConfig.from_edge_lines(1, cfg.u, cfg.v, cfg.w, cfg.edges())
        assert spline_dim(again) == spline_dim(cfg)
        assert pencil_product(again) == pencil_product(cfg)


class TestDimensions:
    def test_generic_mu1(self):
        cfg = ratios_config(1, [1, 2, 3, 5, 7, 11])
        assert nullity(reduced_matrix(cfg)) == 0
        report = spline_dim(cfg)
        assert (report.generic_dim, report.tau, report.total_dim, report.singular) == (6, 0, 6, False)

    def test_singular_mu1(self):
        cfg = ratios_config(1, [1, 2, 3, F(1, 2), F(1, 3), 1])
        assert nullity(reduced_matrix(cfg)) == 1
        report = spline_dim(cfg)
        assert (report.generic_dim, report.tau, report.total_dim, report.singular) == (6, 1, 7, True)
        assert product_criterion(cfg)

    def test_worked_dual_mu2(self):
        cfg = worked_dual()
        assert cfg.mu == 2
        assert nullity(reduced_matrix(cfg)) == 1
        report = spline_dim(cfg)
        assert (report.generic_dim, report.tau, report.total_dim, report.singular) == (10, 1, 11, True)

    def test_matrix_shapes(self):
        cfg = ratios_config(1, [1, 2, 3, 5, 7, 11])
        assert conformality_matrix(cfg).shape == (18, 9)
        assert reduced_matrix(cfg).shape == (6, 6)

    def test_product_examples(self):
        assert product_criterion(ratios_config(2, [1, 2, 3, 4, 5, 6, 7, 8, F(-1, 40320)]))
        assert not product_criterion(ratios_config(2, [1, 2, 3, 4, 5, 6, 7, 8, F(1, 40320)]))

    def test_zero_coefficient(self):
        cfg = MSConfig(0, *AXES, [(0, 1), (1, 1), (1, 2)])
        with pytest.raises(GeometryError, match="edge through opposite vertex"):
            product_criterion(cfg)

    @pytest.mark.parametrize("mu", [1, 2, 3])
    def test_rank_matches_product(self, mu):
        rng = random.Random(mu)
        for i in range(100):
            cfg = random_ms_config(rng, mu, singular=(i % 2 == 0))
            report = spline_dim(cfg)
            assert report.singular == product_criterion(cfg) == (i % 2 == 0)
            assert report.total_dim in (cfg.generic_dim(), cfg.generic_dim() + 1)
            assert nullity(conformality_matrix(cfg)) == nullity(reduced_matrix(cfg))

    def test_unconstrained_random_configs(self):
        rng = random.Random(99)
        for _ in range(50):
            cfg = random_ms_config(rng, 1)
            assert spline_dim(cfg).singular == product_criterion(cfg)


class TestContinuousLinear:
    @pytest.mark.parametrize("ratios,dim", [((1, 1, -1), 4), ((1, 1, 1), 3), ((2, 3, F(-1, 6)), 4)])
    def test_examples(self, ratios, dim):
        assert s10_dim([(1, r) for r in ratios]) == dim

    def test_degenerate_pair(self):
        with pytest.raises(GeometryError):
            s10_dim([(0, 0), (1, 1), (1, 2)])

    def test_random_against_product(self):
        rng = random.Random(10)
        for _ in range(100):
            pairs = [(F(rng.randint(1, 9)) * rng.choice((1, -1)), F(rng.randint(1, 9))) for _ in range(3)]
            product = pencil_product(MSConfig(0, *AXES, pairs))
            assert s10_dim(pairs) == (4 if product == -1 else 3)


class TestGeometry:
    OUTER = (ProjPoint(0, 0, 1), ProjPoint(12, 0, 1), ProjPoint(0, 12, 1))

    def inner(self, k):
        # homothety of ratio k about the centroid (4, 4)
        return tuple(ProjPoint(4 + k * (p[0] - 4), 4 + k * (p[1] - 4), 1) for p in self.OUTER)

    def test_symmetric(self):
        inner = self.inner(F(1, 3))
        assert ms_geometric_check(self.OUTER, inner)
        assert spline_dim(ms_config_from_vertices(self.OUTER, inner)).total_dim == 7

    def test_perturbed(self):
        a, b, c = self.inner(F(1, 3))
        inner = (ProjPoint(a[0] + F(1, 5), a[1], 1), b, c)
        assert not ms_geometric_check(self.OUTER, inner)
        assert spline_dim(ms_config_from_vertices(self.OUTER, inner)).total_dim == 6

    def test_random_inner_triangles(self):
        # the check itself raises if concurrency and the rank disagree
        rng = random.Random(14)
        checked = 0
        for _ in range(30):
            inner = tuple(ProjPoint(rng.randint(2, 6), rng.randint(2, 6), 1) for _ in range(3))
            try:
                ms_geometric_check(self.OUTER, inner)
            except GeometryError:
                continue
            checked += 1
        assert checked > 10

    def test_collapsed(self):
        inner = (ProjPoint(3, 3, 1), ProjPoint(4, 4, 1), ProjPoint(5, 5, 1))
        with pytest.raises(GeometryError, match="degenerate triangle"):
            ms_geometric_check(self.OUTER, inner)


class TestDualityBridge:
    def test_conic_case(self):
        rng = random.Random(31)
        seen = {True: 0, False: 0}
        for k in range(40):
            hexagon = random_conic_hexagon(rng)[0] if k % 2 else random_generic_hexagon(rng)
            p = hexagon.points
            try:
                frame = TriFrame(join(p[0], p[1]), join(p[2], p[3]), join(p[4], p[5]))
                cfg = dual_config(frame, p[0:2], p[2:4], p[4:6])
            except GeometryError:
                continue
            on_conic = conic_through_six(p)
            assert spline_dim(cfg).singular == on_conic
            seen[on_conic] += 1
        assert seen[True] > 5 and seen[False] > 5

    def test_cubic_case(self):
        rng = random.Random(32)
        for _ in range(10):
            cfg, _ = random_nine_point_on_cubic(rng)
            for nine in (cfg, perturb_nine_point(rng, cfg)):
                product = frame_ratio_product(nine.frame, nine.points_on_a, nine.points_on_b, nine.points_on_c)
                dual = dual_config(nine.frame, nine.points_on_a, nine.points_on_b, nine.points_on_c)
                assert spline_dim(dual).singular == (product == -1)

    def test_dual_points_are_the_inputs(self):
        p = ex.POINTS
        assert dual_points(worked_dual()) == [p[0], p[1], p[6], p[2], p[3], p[7], p[4], p[5], p[8]]

    def test_nine_monomial_variant(self):
        # singular exactly when some nine-monomial cubic other than a*b*c passes through the dual points
        def nine_monomial_curve(points, frame):
            abc = frame_product_curve(frame)
            full = evaluation_matrix(points, 3)
            for drop in range(10):
                keep = [j for j in range(10) if j != drop]
                M = RatMatrix([[row[j] for j in keep] for row in full.rows], 9)
                for vec in mat_nullspace(M):
                    coeffs = list(vec)
                    coeffs.insert(drop, F(0))
                    if not HomCurve(3, tuple(coeffs)).is_proportional(abc):
                        return True
            return False

        rng = random.Random(33)
        cfg = ex.nine_point_config()
        assert nine_monomial_curve(cfg.all_points(), ex.FRAME)
        for _ in range(5):
            good, _ = random_nine_point_on_cubic(rng)
            bad = perturb_nine_point(rng, good)
            for nine, expected in ((good, True), (bad, False)):
                dual = dual_config(nine.frame, nine.points_on_a, nine.points_on_b, nine.points_on_c)
                assert spline_dim(dual).singular == expected
                assert nine_monomial_curve(nine.all_points(), nine.frame) == expected
