import random
from fractions import Fraction as F

import pytest

from pascal_invariant.curves import (
    HomCurve,
    conic_through_six,
    contains_line,
    evaluate,
    fit_curves,
    frame_ratio_product,
    tangent_line,
)
from pascal_invariant.generators import (
    perturb_nine_point,
    rand_rational,
    random_conic_hexagon,
    random_generic_hexagon,
    random_nine_point_on_cubic,
    random_point_on_line,
    random_points_on_frame,
    random_frame,
)
from pascal_invariant.pascal import (
    CriterionError,
    HexConfig,
    NinePointConfig,
    char_map,
    conic_tangency_residuals_collinear,
    flexes_collinear,
    pascal_mapping,
    pascal_type_cubic,
    pascal_type_general,
    phi_hexagon,
    residual_tangent_collinear,
    tangent_residual,
    third_intersection,
    verify_pascal,
)
from pascal_invariant.projective import GeometryError, ProjLine, ProjPoint, TriFrame, collinear, combine, join
from pascal_invariant import worked_example as ex

CIRCLE = HomCurve.from_terms(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
FERMAT = HomCurve.from_terms(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): -1})
NODAL = HomCurve.from_terms(3, {(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})
CIRCLE_SIX = [(3, 4, 5), (4, 3, 5), (0, 1, 1), (-3, 4, 5), (-4, -3, 5), (1, 0, 1)]


def hex_of(points) -> HexConfig:
    return HexConfig([ProjPoint(p) for p in points])


class TestCharMap:
    U, V = ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)

    def test_swap(self):
        q = combine(1, self.U, 2, self.V)
        assert char_map(q, self.U, self.V) == combine(2, self.U, 1, self.V)

    def test_worked_value(self):
        q1 = ProjPoint(-1, F(5, 2), 1)
        assert char_map(q1, ex.VERTICES[0], ex.VERTICES[1]) == ProjPoint(-1, F(5, 3), 1)

    def test_fixed_points(self):
        for beta in (1, -1):
            q = combine(1, self.U, beta, self.V)
            assert char_map(q, self.U, self.V) == q
        q = combine(1, self.U, 3, self.V)
        assert char_map(q, self.U, self.V) != q

    def test_involution(self):
        rng = random.Random(6)
        for _ in range(100):
            u, v = ProjPoint(rng.randint(-5, 5), 1, 2), ProjPoint(1, rng.randint(-5, 5), -1)
            if u == v:
                continue
            q = combine(rand_rational(rng, 9, True), u, rand_rational(rng, 9, True), v)
            assert char_map(char_map(q, u, v), u, v) == q

    def test_basis_points(self):
        with pytest.raises(GeometryError, match="basis point has no finite image"):
            char_map(self.U, self.U, self.V)
        with pytest.raises(GeometryError, match="basis point has no finite image"):
            char_map(self.V, self.U, self.V)

    def test_depends_on_relative_scale_only_through_square(self):
        q = combine(1, self.U, 3, self.V)
        assert char_map(q, self.U, self.V.scaled(-1)) == char_map(q, self.U, self.V)
        assert char_map(q, self.U, self.V.scaled(2)) != char_map(q, self.U, self.V)


class TestHexagonMaps:
    def test_worked_opposite_sides(self):
        hexagon = HexConfig(ex.POINTS[:6])
        assert phi_hexagon(hexagon) == ex.OPPOSITE_SIDE_POINTS
        assert hexagon.vertices == ex.VERTICES

    def test_worked_pascal_images(self):
        assert pascal_mapping(HexConfig(ex.POINTS[:6])) == ex.PASCAL_IMAGES
        assert pascal_mapping(HexConfig(ex.POINTS[:6]), ex.VERTICES) == ex.PASCAL_IMAGES

    def test_worked_hexagon_not_on_conic(self):
        assert not verify_pascal(HexConfig(ex.POINTS[:6]))

    def test_inscribed_hexagon(self):
        hexagon = hex_of(CIRCLE_SIX)
        assert collinear(*phi_hexagon(hexagon))
        assert collinear(*pascal_mapping(hexagon))
        assert verify_pascal(hexagon)

    def test_two_triangles(self):
        hexagon = hex_of([(0, 0, 1), (5, 1, 1), (2, 7, 1), (1, 3, 1), (4, -2, 1), (-3, 2, 1)])
        assert not conic_through_six(hexagon.points)
        assert not collinear(*phi_hexagon(hexagon))
        assert not verify_pascal(hexagon)

    def test_cyclic_relabeling(self):
        rng = random.Random(12)
        for _ in range(20):
            hexagon, _ = random_conic_hexagon(rng)
            pts = list(hexagon.points)
            for shift in range(6):
                assert verify_pascal(HexConfig(pts[shift:] + pts[:shift]))
            assert verify_pascal(HexConfig(pts[::-1]))

    def test_random_conic_and_generic(self):
        rng = random.Random(77)
        for _ in range(30):
            hexagon, conic = random_conic_hexagon(rng)
            assert all(evaluate(conic, p) == 0 for p in hexagon.points)
            assert verify_pascal(hexagon)
            assert not verify_pascal(random_generic_hexagon(rng))

    def test_rejects_collinear(self):
        with pytest.raises(GeometryError):
            hex_of([(0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, 1), (1, 2, 1), (3, 1, 1)])


class TestPascalTypeCubic:
    def test_worked_example(self):
        result = pascal_type_cubic(ex.nine_point_config())
        expected = ex.PASCAL_IMAGES + (ProjPoint(2, -1, -2), ProjPoint(F(1, 2), 1, 1), ProjPoint(1, F(47, 42), 1))
        assert result.points == expected
        assert result.curve.is_proportional(ex.CONIC)
        assert all(evaluate(result.curve, p) == 0 for p in result.points)

    def test_random_cubics(self):
        rng = random.Random(101)
        for _ in range(20):
            cfg, cubic = random_nine_point_on_cubic(rng)
            assert all(evaluate(cubic, p) == 0 for p in cfg.all_points())
            result = pascal_type_cubic(cfg)
            assert result.curve is not None
            assert all(evaluate(result.curve, p) == 0 for p in result.points)
            assert not any(contains_line(result.curve, l) for l in cfg.frame.lines)

    def test_perturbed_point(self):
        rng = random.Random(5)
        cfg, _ = random_nine_point_on_cubic(rng)
        bad = perturb_nine_point(rng, cfg)
        with pytest.raises(CriterionError, match="points not on a cubic") as info:
            pascal_type_cubic(bad)
        assert info.value.product != -1

    def test_rescaled_vertices(self):
        rng = random.Random(66)
        cfg, _ = random_nine_point_on_cubic(rng)
        for _ in range(5):
            verts = [p.scaled(rand_rational(rng, 9, True)) for p in cfg.frame.vertices]
            assert pascal_type_cubic(cfg, verts).curve is not None

    def test_ratio_bridge(self):
        # output ratio product is 1 exactly when the input product is -1
        rng = random.Random(8)
        for k in range(20):
            if k % 2:
                cfg, _ = random_nine_point_on_cubic(rng)
            else:
                cfg, _ = random_nine_point_on_cubic(rng)
                cfg = perturb_nine_point(rng, cfg)
            frame = cfg.frame
            before = frame_ratio_product(frame, cfg.points_on_a, cfg.points_on_b, cfg.points_on_c)
            chi1, chi2, chi3 = pascal_mapping(HexConfig(cfg.hexagon_points()))
            p7, p8, p9 = cfg.residual_points()
            after = frame_ratio_product(frame, (chi1, p7), (chi3, p8), (chi2, p9))
            assert (after == 1) == (before == -1)
            assert after == -before

    def test_nine_point_validation(self):
        p = ex.POINTS
        with pytest.raises(GeometryError):
            NinePointConfig(ex.FRAME, (p[0], p[1], p[2]), (p[3], p[2], p[7]), (p[4], p[5], p[8]))
        with pytest.raises(ValueError):
            NinePointConfig(ex.FRAME, (p[0], p[1]), (p[2], p[3], p[7]), (p[4], p[5], p[8]))


class TestPascalTypeGeneral:
    def test_degree_two_is_pascal(self):
        rng = random.Random(21)
        for _ in range(20):
            hexagon, _ = random_conic_hexagon(rng)
            p = hexagon.points
            try:
                frame = TriFrame(join(p[0], p[1]), join(p[2], p[3]), join(p[4], p[5]))
            except GeometryError:
                continue
            result = pascal_type_general(frame, p[0:2], p[2:4], p[4:6])
            assert result.curve is not None and result.curve.degree == 1
            assert result.input_criterion and result.output_criterion

    def test_degree_three_matches_cubic_version(self):
        cfg = ex.nine_point_config()
        result = pascal_type_general(ex.FRAME, cfg.points_on_a, cfg.points_on_b, cfg.points_on_c)
        assert result.curve.is_proportional(ex.CONIC)
        assert set(result.points) == set(pascal_type_cubic(cfg).points)
        assert result.input_criterion and result.output_criterion

    @staticmethod
    def _quartic_points(rng, on_curve: bool):
        frame = random_frame(rng)
        a, b, c = random_points_on_frame(rng, frame, 4)
        u, v, w = frame.vertices
        partial = frame_ratio_product(frame, a, b, c[:3])
        target = F(1) if on_curve else F(2)
        c[3] = combine(1, w, target / partial, u)
        return frame, a, b, c

    def test_degree_four(self):
        rng = random.Random(404)
        done = 0
        while done < 5:
            frame, a, b, c = self._quartic_points(rng, True)
            try:
                result = pascal_type_general(frame, a, b, c)
            except GeometryError:
                continue
            done += 1
            assert result.input_criterion and result.input_curve is not None
            assert result.input_curve.degree == 4
            assert result.output_criterion
            assert result.curve is not None and result.curve.degree == 3
            assert len(result.points) == 9
            assert all(evaluate(result.curve, p) == 0 for p in result.points)

    def test_degree_four_off_curve(self):
        rng = random.Random(405)
        done = 0
        while done < 5:
            frame, a, b, c = self._quartic_points(rng, False)
            try:
                result = pascal_type_general(frame, a, b, c)
            except GeometryError:
                continue
            done += 1
            assert not result.input_criterion and result.input_curve is None
            assert not result.output_criterion and result.curve is None

    def test_collinear_choice(self):
        # (-1, 3), (0, 1), (1, -1) lie on y = 1 - 2x, one on each frame line
        a = [ProjPoint(-1, 3, 1), ProjPoint(-1, 2, 1)]
        b = [ProjPoint(0, 1, 1), ProjPoint(5, 1, 1)]
        c = [ProjPoint(1, -1, 1), ProjPoint(1, 7, 1)]
        with pytest.raises(GeometryError, match="pick different six"):
            pascal_type_general(ex.FRAME, a, b, c)


class TestTangentCorollaries:
    NODAL_LINE_POINTS = (ProjPoint(3, 6, 1), ProjPoint(8, 24, 1), ProjPoint(F(24, 25), F(-168, 125), 1))

    def test_nodal_secant(self):
        line = join(*self.NODAL_LINE_POINTS[:2])
        assert third_intersection(NODAL, *self.NODAL_LINE_POINTS[:2]) == self.NODAL_LINE_POINTS[2]
        residuals = [tangent_residual(NODAL, p) for p in self.NODAL_LINE_POINTS]
        assert all(evaluate(NODAL, r) == 0 for r in residuals)
        assert residual_tangent_collinear(NODAL, line, self.NODAL_LINE_POINTS)

    def test_random_nodal_secants(self):
        # smooth points of the nodal cubic: (t^2 - 1, t(t^2 - 1), 1) with t != +-1
        rng = random.Random(3)
        checked = 0
        for _ in range(40):
            s, t = rand_rational(rng, 7), rand_rational(rng, 7)
            if s * s == 1 or t * t == 1 or s == t:
                continue
            p = ProjPoint(s * s - 1, s * (s * s - 1), 1)
            q = ProjPoint(t * t - 1, t * (t * t - 1), 1)
            r = third_intersection(NODAL, p, q)
            if r in (p, q) or r == ProjPoint(0, 0, 1):
                continue
            assert residual_tangent_collinear(NODAL, join(p, q), (p, q, r))
            checked += 1
        assert checked >= 10

    def test_fermat_line(self):
        pts = (ProjPoint(0, 1, 1), ProjPoint(1, 0, 1), ProjPoint(-1, 1, 0))
        assert third_intersection(FERMAT, pts[0], pts[1]) == pts[2]
        assert residual_tangent_collinear(FERMAT, join(pts[0], pts[1]), pts)

    def test_points_not_on_line(self):
        with pytest.raises(GeometryError):
            residual_tangent_collinear(NODAL, join(*self.NODAL_LINE_POINTS[:2]),
                                       (self.NODAL_LINE_POINTS[0], self.NODAL_LINE_POINTS[1], ProjPoint(0, 0, 1)))

    def test_fermat_flexes(self):
        assert flexes_collinear(FERMAT, (0, 1, 1), (1, 0, 1), (-1, 1, 0))

    def test_third_flex_from_division(self):
        r = third_intersection(FERMAT, ProjPoint(0, 1, 1), ProjPoint(1, 0, 1))
        assert r == ProjPoint(-1, 1, 0)
        assert flexes_collinear(FERMAT, (0, 1, 1), (1, 0, 1), r)

    def test_non_flex(self):
        with pytest.raises(GeometryError):
            flexes_collinear(NODAL, (3, 6, 1), (8, 24, 1), (F(24, 25), F(-168, 125), 1))

    @staticmethod
    def _tangency(rng, perturb: bool = False):
        while True:
            pts = []
            for t in (rand_rational(rng, 6) for _ in range(3)):
                pts.append(ProjPoint(1 - t * t, 2 * t, 1 + t * t))
            if len(set(pts)) < 3:
                continue
            tangents = [tangent_line(CIRCLE, p) for p in pts]
            if perturb:
                tangents[0] = join(pts[0], ProjPoint(rng.randint(-5, 5), rng.randint(-5, 5), 7))
            m = ProjLine(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(1, 5))
            lam = rand_rational(rng, 5, True)
            product = HomCurve.from_line(tangents[0]) * HomCurve.from_line(tangents[1]) * HomCurve.from_line(tangents[2])
            C = CIRCLE * HomCurve.from_line(m) + product * lam
            try:
                if all(any(tangent_line(C, p)) for p in pts):
                    return C, pts
            except GeometryError:
                continue

    def test_conic_tangency(self):
        rng = random.Random(48)
        for _ in range(10):
            C, pts = self._tangency(rng)
            assert conic_tangency_residuals_collinear(C, CIRCLE, pts)

    def test_broken_tangency(self):
        rng = random.Random(49)
        C, pts = self._tangency(rng, perturb=True)
        with pytest.raises(GeometryError, match="not a tangential contact"):
            conic_tangency_residuals_collinear(C, CIRCLE, pts)

    def test_double_line_conic(self):
        rng = random.Random(50)
        C, pts = self._tangency(rng)
        double = HomCurve.from_line(ProjLine(1, 0, 0)) ** 2
        with pytest.raises(GeometryError):
            conic_tangency_residuals_collinear(C, double, pts)
