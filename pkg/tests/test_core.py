import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzy_metric.core import (
    INF,
    DomainError,
    EuclideanSpace,
    FiniteSpace,
    ProductPoint,
    RealLine,
    UsageError,
    as_ext,
    ext_add,
    ext_isclose,
    ext_le,
    format_ext,
    parse_ext,
    point_set_directed_hausdorff,
    point_set_hausdorff,
    product_distance,
)
from fuzzy_metric.core.config import WORKERS_ENV, worker_count
from fuzzy_metric.intervals import IntervalUnion


class TestExtReal:
    def test_as_ext_rejects_negative_and_nan(self):
        with pytest.raises(ValueError):
            as_ext(-1)
        with pytest.raises(ValueError):
            as_ext(float("nan"))
        assert as_ext(INF) == INF

    def test_addition_saturates(self):
        assert ext_add(1.0, INF) == INF
        assert ext_add(INF, INF) == INF
        assert ext_add(1.5, 2.0) == 3.5

    def test_infinity_only_matches_itself(self):
        assert ext_isclose(INF, INF)
        assert not ext_isclose(1e300, INF)
        assert ext_isclose(1.0, 1.0 + 1e-13)

    def test_ordering_with_infinity(self):
        assert ext_le(5.0, INF)
        assert ext_le(INF, INF)
        assert not ext_le(INF, 5.0)
        assert ext_le(1.0 + 1e-13, 1.0)

    @pytest.mark.parametrize("text,value", [("+inf", INF), ("inf", INF), ("-inf", -INF), ("2.5", 2.5), (3, 3.0)])
    def test_parse_sentinels(self, text, value):
        assert parse_ext(text) == value

    def test_parse_rejects_junk(self):
        with pytest.raises(ValueError):
            parse_ext("lots")
        with pytest.raises(ValueError):
            parse_ext(None)

    def test_format_inverts_parse(self):
        assert format_ext(INF) == "+inf"
        assert format_ext(-INF) == "-inf"
        assert parse_ext(format_ext(INF)) == INF
        assert format_ext(0.25) == 0.25


class TestFiniteSpace:
    def test_from_points_labels_and_table(self):
        space = FiniteSpace.from_points([0, 1, 3])
        assert space.labels == ("0", "1", "3")
        assert space.distance("1", "3") == 2.0
        assert space.point(3) == "3"

    def test_numeric_labels_match_their_lookups(self):
        space = FiniteSpace([0.0, 1.0, 2.5], [[0, 1, 2.5], [1, 0, 1.5], [2.5, 1.5, 0]])
        assert space.labels == ("0", "1", "2.5")
        assert space.point(0.0) == space.point(0) == space.point("0") == "0"
        assert space.point(np.float64(2.5)) == "2.5"

    def test_close_points_keep_distinct_labels(self):
        space = FiniteSpace.from_points([0.1, 0.1000001, 0.3])
        assert len(set(space.labels)) == 3
        assert space.distance(0.1, 0.1000001) == pytest.approx(1e-7)

    def test_rejects_tables_that_are_not_metrics(self):
        with pytest.raises(ValueError, match="triangle"):
            FiniteSpace(["a", "b", "c"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
        with pytest.raises(ValueError, match="asymmetric"):
            FiniteSpace(["a", "b"], [[0, 1], [2, 0]])
        with pytest.raises(ValueError, match="distance 0"):
            FiniteSpace(["a", "b"], [[0, 0], [0, 0]])

    def test_unknown_label(self):
        with pytest.raises(UsageError):
            FiniteSpace.discrete(["a", "b"]).point("z")

    def test_set_hausdorff(self, three_points):
        a = three_points.make_set([0, 1])
        b = three_points.make_set([3])
        assert three_points.directed_hausdorff(a, b) == 3.0
        assert three_points.directed_hausdorff(b, a) == 2.0
        assert three_points.hausdorff(a, b) == 3.0

    def test_every_finite_set_is_compact(self, three_points):
        s = three_points.make_set(["0", "3"])
        assert three_points.is_closed(s)
        assert three_points.is_compact(s)


class TestEuclidean:
    def test_pairwise_matches_norm(self, plane):
        d = plane.pairwise([(0, 0)], [(3, 4), (1, 0)])
        np.testing.assert_allclose(d, [[5.0, 1.0]])

    def test_dimension_checked(self, plane):
        with pytest.raises((UsageError, ValueError)):
            plane.point((1, 2, 3))

    def test_point_cloud_hausdorff(self, plane):
        a = plane.make_set([(0, 0), (1, 0)])
        b = plane.make_set([(0, 0)])
        assert plane.hausdorff(a, b) == pytest.approx(1.0)


class TestRealLine:
    def test_interval_hausdorff(self, line):
        assert line.hausdorff(IntervalUnion.closed(0, 1), IntervalUnion.closed(2, 3)) == 2.0
        assert line.hausdorff(IntervalUnion.closed(0, 1), IntervalUnion.closed(0, 1)) == 0.0

    def test_unbounded_sets_may_be_infinitely_apart(self, line):
        ray = IntervalUnion([(-math.inf, 0.0)])
        assert line.hausdorff(ray, IntervalUnion.closed(-1, 0)) == INF
        assert line.directed_hausdorff(IntervalUnion.closed(-1, 0), ray) == 0.0

    def test_empty_set_has_no_distance(self, line):
        with pytest.raises(DomainError):
            line.hausdorff(IntervalUnion.empty(), IntervalUnion.closed(0, 1))

    def test_distance_to_set(self, line):
        s = IntervalUnion.closed(0, 1) | IntervalUnion.closed(4, 5)
        assert line.distance_to_set(2.0, s) == 1.0
        assert line.distance_to_set(0.5, s) == 0.0


class TestPointSets:
    def test_directed_is_asymmetric(self, line):
        assert point_set_directed_hausdorff([0, 1], [0], line) == 1.0
        assert point_set_directed_hausdorff([0], [0, 1], line) == 0.0
        assert point_set_hausdorff([0], [0, 1], line) == 1.0

    def test_empty_point_set(self, line):
        with pytest.raises(DomainError):
            point_set_hausdorff([], [0], line)

    @settings(derandomize=True, max_examples=60)
    @given(
        st.lists(st.integers(-20, 20), min_size=1, max_size=6),
        st.lists(st.integers(-20, 20), min_size=1, max_size=6),
    )
    def test_agrees_with_interval_engine(self, xs, ys):
        line = RealLine()
        expected = line.hausdorff(IntervalUnion.from_points(xs), IntervalUnion.from_points(ys))
        assert point_set_hausdorff(xs, ys, line) == pytest.approx(expected)


class TestProduct:
    def test_product_distance(self, plane):
        p = ProductPoint(plane, (0, 0), 0.25)
        q = ProductPoint(plane, (3, 4), 1.0)
        assert product_distance(p, q) == pytest.approx(5.75)
        assert product_distance(p, q, plane) == pytest.approx(5.75)

    def test_named_space_must_be_the_points_space(self, line, plane):
        p = ProductPoint(plane, (0, 0), 0.25)
        with pytest.raises(UsageError):
            product_distance(p, p, line)

    def test_height_range(self, line):
        with pytest.raises(ValueError):
            ProductPoint(line, 0.0, 1.5)

    def test_spaces_must_match(self, line, plane):
        with pytest.raises(UsageError):
            product_distance(ProductPoint(line, 0.0, 0.0), ProductPoint(plane, (0, 0), 0.0))


class TestWorkers:
    def test_explicit_wins(self, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV, "8")
        assert worker_count(2) == 2
        assert worker_count() == 8

    def test_bad_environment_falls_back(self, monkeypatch):
        monkeypatch.setenv(WORKERS_ENV, "many")
        assert worker_count() == 1
