import math

import pytest
from hypothesis import given, settings, strategies as st

from optishape.geometry import (
    Point2,
    Shape,
    area,
    area_coefficient,
    perimeter,
    polygon_vertices,
    shoelace_area,
)
from optishape.optimize import central_diff

CIRCLE = Shape.circle()
SQUARE = Shape.regular_polygon(4)
HEXAGON = Shape.regular_polygon(6)

SWEEP_SHAPES = [CIRCLE] + [Shape.regular_polygon(n) for n in (3, 4, 5, 6, 8, 12, 64)]


class TestShape:
    def test_polygon_needs_three_sides(self):
        with pytest.raises(ValueError):
            Shape.regular_polygon(2)

    def test_circle_has_no_sides(self):
        assert CIRCLE.sides is None
        assert CIRCLE.label == "circle"
        assert HEXAGON.label == "6-gon"

    def test_point_requires_finite_coordinates(self):
        with pytest.raises(ValueError):
            Point2(math.nan, 0.0)
        with pytest.raises(ValueError):
            Point2(0.0, math.inf)


class TestAreaCoefficient:
    def test_circle_is_pi(self):
        assert area_coefficient(CIRCLE) == math.pi

    def test_square_is_4(self):
        assert area_coefficient(SQUARE) == pytest.approx(4.0, abs=1e-12)

    def test_hexagon_matches_shoelace_oracle(self):
        oracle = shoelace_area(polygon_vertices(6, 1.0))
        c = area_coefficient(HEXAGON)
        assert c == pytest.approx(oracle, abs=1e-12)
        assert c == pytest.approx(3.4641016151377544, abs=1e-12)  # 2*sqrt(3)

    def test_strictly_decreasing_toward_pi(self):
        coefficients = [area_coefficient(Shape.regular_polygon(n)) for n in range(3, 65)]
        for smaller, larger in zip(coefficients[1:], coefficients):
            assert smaller < larger
        assert all(c > math.pi for c in coefficients)

    def test_limit_approaches_circle(self):
        assert area_coefficient(Shape.regular_polygon(10_000)) == pytest.approx(
            math.pi, rel=1e-7
        )


class TestAreaAndPerimeter:
    def test_unit_circle_area(self):
        assert area(CIRCLE, 1.0) == math.pi

    def test_square_area(self):
        assert area(SQUARE, 3.0) == pytest.approx(36.0, rel=1e-12)

    def test_hexagon_area_matches_shoelace_oracle(self):
        got = area(HEXAGON, 2.0)
        assert got == pytest.approx(shoelace_area(polygon_vertices(6, 2.0)), rel=1e-12)
        assert got == pytest.approx(13.856406460551018, rel=1e-12)  # 8*sqrt(3)

    def test_unit_circle_perimeter(self):
        assert perimeter(CIRCLE, 1.0) == pytest.approx(2.0 * math.pi, rel=1e-15)

    def test_square_perimeter_is_8r(self):
        assert perimeter(SQUARE, 3.0) == pytest.approx(24.0, rel=1e-12)

    def test_hexagon_perimeter_matches_edge_sum_oracle(self):
        pts = polygon_vertices(6, 1.0)
        edge_sum = sum(
            math.hypot(q.x - p.x, q.y - p.y)
            for p, q in zip(pts, pts[1:] + pts[:1])
        )
        got = perimeter(HEXAGON, 1.0)
        assert got == pytest.approx(edge_sum, rel=1e-12)
        assert got == pytest.approx(6.928203230275509, rel=1e-12)  # 4*sqrt(3)

    @pytest.mark.parametrize("bad", [0.0, -1.0])
    def test_nonpositive_inradius_rejected(self, bad):
        with pytest.raises(ValueError):
            area(CIRCLE, bad)
        with pytest.raises(ValueError):
            perimeter(SQUARE, bad)


class TestPolygonVertices:
    def test_unit_square_corners(self):
        got = polygon_vertices(4, 1.0)
        expected = [(1, -1), (1, 1), (-1, 1), (-1, -1)]
        for p, (ex, ey) in zip(got, expected):
            assert p.x == pytest.approx(ex, abs=1e-12)
            assert p.y == pytest.approx(ey, abs=1e-12)

    def test_triangle_circumradius_is_2(self):
        for p in polygon_vertices(3, 1.0):
            assert math.hypot(p.x, p.y) == pytest.approx(2.0, abs=1e-12)

    def test_hexagon_circumradius(self):
        for p in polygon_vertices(6, 1.0):
            assert math.hypot(p.x, p.y) == pytest.approx(1.1547005383792517, abs=1e-12)

    def test_first_edge_midpoint_on_positive_x_axis(self):
        pts = polygon_vertices(5, 2.0)
        mid_x = (pts[0].x + pts[1].x) / 2.0
        mid_y = (pts[0].y + pts[1].y) / 2.0
        assert mid_x == pytest.approx(2.0, abs=1e-12)
        assert mid_y == pytest.approx(0.0, abs=1e-12)

    def test_counterclockwise_orientation(self):
        pts = polygon_vertices(7, 1.0)
        signed = sum(
            p.x * q.y - q.x * p.y for p, q in zip(pts, pts[1:] + pts[:1])
        )
        assert signed > 0

    def test_too_few_sides_rejected(self):
        with pytest.raises(ValueError):
            polygon_vertices(2, 1.0)


class TestShoelace:
    def test_unit_square(self):
        pts = [Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)]
        assert shoelace_area(pts) == 1.0

    def test_degenerate_collinear(self):
        pts = [Point2(0, 0), Point2(1, 1), Point2(2, 2)]
        assert shoelace_area(pts) == 0.0

    def test_octagon_matches_hand_formula(self):
        # independent hand computation: n*tan(pi/n) with n=8
        assert shoelace_area(polygon_vertices(8, 1.0)) == pytest.approx(
            8.0 * math.tan(math.pi / 8.0), abs=1e-12
        )
        assert shoelace_area(polygon_vertices(8, 1.0)) == pytest.approx(
            3.3137084989847603, abs=1e-12
        )

    def test_orientation_independent(self):
        pts = polygon_vertices(5, 1.0)
        assert shoelace_area(pts) == pytest.approx(
            shoelace_area(list(reversed(pts))), abs=0
        )

    def test_too_few_points_rejected(self):
        with pytest.raises(ValueError):
            shoelace_area([Point2(0, 0), Point2(1, 0)])


class TestInvariants:
    def test_perimeter_is_area_derivative(self):
        # central difference of the area at step r*1e-6 vs the perimeter
        for shape in SWEEP_SHAPES:
            for exponent in range(-3, 4):
                r = 10.0**exponent
                estimate = central_diff(lambda x: area(shape, x), r, r * 1e-6)
                p = perimeter(shape, r)
                assert abs(estimate - p) / p <= 1e-6

    def test_area_over_perimeter_is_half_inradius(self):
        for shape in SWEEP_SHAPES:
            for r in (1e-3, 0.37, 1.0, 42.0, 1e3):
                ratio = area(shape, r) / perimeter(shape, r)
                assert abs(ratio - r / 2.0) <= 4.0 * math.ulp(r / 2.0)

    def test_coefficient_matches_shoelace_up_to_64(self):
        for n in range(3, 65):
            gap = abs(
                area_coefficient(Shape.regular_polygon(n))
                - shoelace_area(polygon_vertices(n, 1.0))
            )
            assert gap <= 1e-12

    def test_scaling_laws(self):
        for shape in SWEEP_SHAPES:
            for r in (1e-3, 1.0, 17.0):
                for k in (0.5, 2.0, 10.0):
                    assert area(shape, k * r) == pytest.approx(
                        k * k * area(shape, r), rel=1e-12
                    )
                    assert perimeter(shape, k * r) == pytest.approx(
                        k * perimeter(shape, r), rel=1e-12
                    )


class TestProperties:
    @given(
        n=st.integers(min_value=3, max_value=200),
        r=st.floats(min_value=1e-3, max_value=1e3),
    )
    @settings(max_examples=100, deadline=None)
    def test_ratio_property_random_polygons(self, n, r):
        shape = Shape.regular_polygon(n)
        ratio = area(shape, r) / perimeter(shape, r)
        assert abs(ratio - r / 2.0) <= 4.0 * math.ulp(r / 2.0)

    @given(
        n=st.integers(min_value=3, max_value=100),
        r=st.floats(min_value=1e-2, max_value=1e2),
    )
    @settings(max_examples=50, deadline=None)
    def test_vertices_consistent_with_algebra(self, n, r):
        pts = polygon_vertices(n, r)
        assert len(pts) == n
        assert shoelace_area(pts) == pytest.approx(area(Shape.regular_polygon(n), r), rel=1e-9)

    @given(
        n=st.integers(min_value=3, max_value=30),
        shift=st.integers(min_value=0, max_value=29),
    )
    @settings(max_examples=50, deadline=None)
    def test_shoelace_invariant_under_cyclic_shift(self, n, shift):
        pts = polygon_vertices(n, 1.0)
        shifted = pts[shift % n :] + pts[: shift % n]
        assert shoelace_area(shifted) == pytest.approx(shoelace_area(pts), rel=1e-12)
