from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loclab.geometry import (IDENTICAL, PARALLEL, Direction, Line, Point, Ray, Segment, as_scalar,
                             format_scalar, intersect_lines, orient, parse_scalar, ray_contains,
                             segments_intersect, side_of_line)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
points = st.builds(Point, rationals, rationals)


def P(x, y):
    return Point.of(x, y)


class TestScalars:
    def test_parse_and_format_round_trip(self):
        for text in ("-1", "0", "5/41", "-7/3"):
            assert format_scalar(parse_scalar(text)) == text

    def test_parse_canonicalizes(self):
        assert parse_scalar("10/4") == F(5, 2)
        assert format_scalar(parse_scalar("10/4")) == "5/2"

    @pytest.mark.parametrize("bad", ["", "1.5", "1/0", "a/b", "1e3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_scalar(bad)

    def test_floats_and_bools_refused(self):
        with pytest.raises(TypeError):
            as_scalar(0.5)
        with pytest.raises(TypeError):
            as_scalar(True)

    @given(rationals)
    def test_round_trip_any(self, q):
        assert parse_scalar(format_scalar(q)) == q


class TestOrient:
    def test_collinear(self):
        assert orient(P(0, 0), P(1, 0), P(2, 0)) == 0

    def test_ccw(self):
        assert orient(P(0, 0), P(1, 0), P(0, 1)) == 1

    def test_hand_expanded(self):
        # (1, 3) x (-39, 0) = 1*0 - 3*(-39) = 117 > 0
        assert orient(P(39, 0), P(40, 3), P(0, 0)) == 1

    @given(points, points, points)
    def test_antisymmetric(self, a, b, c):
        assert orient(a, b, c) == -orient(a, c, b)

    @given(points, points, rationals)
    def test_zero_iff_on_line(self, a, b, t):
        if a == b:
            return
        c = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        assert orient(a, b, c) == 0
        off = Point(c.x + (b.y - a.y), c.y - (b.x - a.x))   # step along the normal
        assert orient(a, b, off) != 0


class TestLines:
    def test_canonical_form(self):
        ln = Line.through(P(-1, -2), P(40, 0))
        assert (ln.a, ln.b, ln.c) == (2, -41, 80)

    def test_vertical_has_positive_a(self):
        ln = Line.through(P(0, 5), P(0, -3))
        assert (ln.a, ln.b, ln.c) == (1, 0, 0)

    def test_edge_line(self):
        ln = Line.through(P(39, 0), P(40, 3))
        assert (ln.a, ln.b, ln.c) == (3, -1, 117)

    def test_side_examples(self):
        x0 = Line.through(P(0, 0), P(0, 1))
        assert side_of_line(x0, P(1, 0)) == 1
        assert side_of_line(x0, P(0, 7)) == 0
        assert side_of_line(Line.through(P(-1, -2), P(40, 0)), P(0, 0)) == -1

    @given(points, points, rationals, rationals)
    def test_any_two_points_same_line(self, a, b, s, t):
        if a == b or s == t:
            return
        p = Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y))
        q = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        assert Line.through(a, b) == Line.through(p, q) == Line.through(q, p)

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            Line.through(P(1, 1), P(1, 1))
        with pytest.raises(ValueError):
            Line.from_coefficients(0, 0, 3)


class TestIntersect:
    def test_axes(self):
        assert intersect_lines(Line.from_coefficients(1, 0, 0), Line.from_coefficients(0, 1, 0)) == P(0, 0)

    def test_parallel_and_identical(self):
        y0, y1 = Line.from_coefficients(0, 1, 0), Line.from_coefficients(0, 1, 1)
        assert intersect_lines(y0, y1) == PARALLEL
        assert intersect_lines(y0, Line.from_coefficients(0, 3, 0)) == IDENTICAL

    def test_spike_edge_meets_vertical(self):
        hit = intersect_lines(Line.through(P(39, 0), P(40, 3)), Line.from_coefficients(1, 0, 40))
        assert hit == P(40, 3)

    @given(points, points, points, points)
    @settings(max_examples=200)
    def test_point_lies_on_both(self, a, b, c, d):
        if a == b or c == d:
            return
        l1, l2 = Line.through(a, b), Line.through(c, d)
        hit = intersect_lines(l1, l2)
        if isinstance(hit, Point):
            assert side_of_line(l1, hit) == 0 == side_of_line(l2, hit)
            # independent check with integer arithmetic on the raw two-point forms
            for (p, q) in ((a, b), (c, d)):
                assert (q.x - p.x) * (hit.y - p.y) == (q.y - p.y) * (hit.x - p.x)


class TestRaysAndSegments:
    def test_ray_contains(self):
        r = Ray(P(0, 0), Direction.of(1, 0))
        assert ray_contains(r, P(5, 0))
        assert not ray_contains(r, P(-1, 0))
        assert ray_contains(r, P(0, 0))

    def test_proof_ray(self):
        assert ray_contains(Ray(P(80, 5), Direction.of(-41, -5)), P(39, 0))

    def test_zero_direction_rejected(self):
        with pytest.raises(ValueError):
            Direction.of(0, 0)

    def test_direction_equivalence(self):
        assert Direction.of(2, 4).same_way(Direction.of(1, 2))
        assert not Direction.of(2, 4).same_way(Direction.of(-1, -2))
        assert Direction.of(F(1, 2), F(3, 4)).normalized() == Direction.of(2, 3)

    def test_segment_needs_distinct_ends(self):
        with pytest.raises(ValueError):
            Segment(P(1, 1), P(1, 1))

    def test_segments_intersect_closed(self):
        s = Segment(P(0, 0), P(2, 0))
        assert segments_intersect(s, Segment(P(2, 0), P(3, 1)))     # shared endpoint
        assert segments_intersect(s, Segment(P(1, -1), P(1, 1)))
        assert not segments_intersect(s, Segment(P(3, 0), P(4, 0)))
        assert segments_intersect(s, Segment(P(1, 0), P(5, 0)))      # collinear overlap
