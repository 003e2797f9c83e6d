import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzy_metric import (
    EuclideanSpace,
    IntervalUnion,
    SendoElement,
    StepFuzzySet,
    end_metric,
    send_metric,
    sup_metric,
)
from fuzzy_metric.compactness import (
    closedness_within,
    flatten_below,
    greedy_eps_net,
    project_to_grid,
    relative_compactness_report,
    total_boundedness_report,
    truncate_above,
    union_at_level,
    verify_coverage,
)
from fuzzy_metric.convergence import make_family
from fuzzy_metric.core.errors import DomainError, PreconditionError, UsageError
from fuzzy_metric.fuzzy import arrow_forward, is_arrow_image
from fuzzy_metric.intervals import Interval

from conftest import line_step_sets

EPS = st.sampled_from([0.1, 0.2, 0.25, 0.3, 0.5, 0.75])


def closed(lo, hi):
    return IntervalUnion.closed(lo, hi)


class TestNets:
    def test_unit_interval(self, line):
        cert = greedy_eps_net(line, closed(0, 1), 0.3)
        assert cert.centers == [0.0, 0.5, 1.0]
        assert cert.coverage == pytest.approx(0.25)
        assert cert.success and cert.verified

    def test_components_are_covered(self, line):
        s = IntervalUnion([(0, 1), (5, 5), (7, 9)])
        cert = greedy_eps_net(line, s, 0.4)
        assert cert.success and cert.verified
        assert verify_coverage(line, s, cert.centers, 0.4)

    def test_unbounded_set_fails(self, line):
        cert = greedy_eps_net(line, IntervalUnion([Interval(0.0, math.inf)]), 0.5)
        assert not cert.success
        assert cert.coverage == math.inf
        assert cert.reason == "unbounded set"
        assert cert.to_dict()["coverage"] == "+inf"

    def test_point_sets(self, three_points):
        cert = greedy_eps_net(three_points, frozenset({"0", "1", "3"}), 1.0)
        assert cert.success and cert.verified
        assert len(cert.centers) == 2

    def test_plane_cloud(self, plane):
        square = [(0, 0), (0, 1), (1, 0), (1, 1)]
        cert = greedy_eps_net(plane, plane.make_set(square), 1.0)
        assert cert.coverage == pytest.approx(1.0)
        assert verify_coverage(plane, plane.make_set(square), cert.centers, 1.0)

    def test_large_clouds_never_build_the_full_matrix(self):
        class CountingPlane(EuclideanSpace):
            def __init__(self):
                super().__init__(2)
                self.largest = 0

            def pairwise(self, a, b):
                self.largest = max(self.largest, len(a) * len(b))
                return super().pairwise(a, b)

        space = CountingPlane()
        cloud = space.make_set((i / 10, j / 10) for i in range(40) for j in range(30))
        cert = greedy_eps_net(space, cloud, 0.5)
        assert cert.success and cert.verified
        assert space.largest < len(cloud) ** 2 // 4

    def test_verifier_is_independent(self, line):
        assert not verify_coverage(line, closed(0, 1), [0.0], 0.4)
        assert verify_coverage(line, closed(0, 1), [0.25, 0.75], 0.25)
        assert not verify_coverage(line, closed(0, 1), [], 0.5)

    @pytest.mark.parametrize("eps", [0.0, -1.0, math.inf])
    def test_bad_eps(self, line, eps):
        with pytest.raises(UsageError):
            greedy_eps_net(line, closed(0, 1), eps)

    def test_empty_set(self, line):
        with pytest.raises(UsageError):
            greedy_eps_net(line, IntervalUnion.empty(), 0.5)

    @pytest.mark.slow
    @settings(derandomize=True, max_examples=200, deadline=None)
    @given(line_step_sets(), EPS)
    def test_nets_of_cuts_cover(self, u, eps):
        cert = greedy_eps_net(u.space, u.cut(0.0), eps)
        assert cert.success
        assert cert.verified
        assert verify_coverage(u.space, u.cut(0.0), cert.centers, eps)


class TestTotalBoundedness:
    def test_union_at_level_includes_ghosts(self, line):
        v = SendoElement(StepFuzzySet.characteristic(line, closed(0, 1)), ghost=[2.0])
        assert union_at_level([v], 0.0) == IntervalUnion([(0, 1), (2, 2)])
        assert union_at_level([v], 0.5) == closed(0, 1)

    def test_bounded_collection(self, line):
        items = [StepFuzzySet.characteristic(line, closed(0, k)) for k in (1, 2, 3)]
        report = total_boundedness_report(items, levels=[0.5, 1.0], eps=0.5)
        assert report.totally_bounded
        assert report.failures() == []
        assert report.label == "prefix verdict at eps=0.5"

    def test_rays_fail_above_the_jump(self):
        fam = make_family("snc", resolution=50)
        report = total_boundedness_report(fam.members(6), levels=[0.25], eps=0.1)
        assert not report.totally_bounded
        assert report.failures() == [0.25]
        assert report.certificates[0.25].reason == "unbounded set"

    def test_send_mode_uses_the_zero_level(self, quick_start):
        report = total_boundedness_report(list(quick_start), eps=0.5, mode="send")
        assert list(report.certificates) == [0.0]
        assert report.totally_bounded

    def test_bad_mode(self, quick_start):
        with pytest.raises(UsageError):
            total_boundedness_report(list(quick_start), mode="zero")

    def test_mixed_spaces(self, line, plane):
        with pytest.raises(UsageError):
            union_at_level([StepFuzzySet.singleton(line, 0), StepFuzzySet.singleton(plane, (0, 0))], 0.5)

    def test_relative_compactness(self, quick_start):
        report = relative_compactness_report(list(quick_start), levels=[0.5, 1.0], eps=0.25)
        assert report.relatively_compact
        assert report.closed_in_space
        assert report.to_dict()["relatively_compact"] is True


class TestProjection:
    def test_interval_onto_quarters(self, line):
        v = StepFuzzySet.characteristic(line, closed(0, 1))
        grid = [0.0, 0.25, 0.5, 0.75, 1.0]
        w = project_to_grid(v, grid, 0.3)
        assert w == StepFuzzySet.characteristic(line, IntervalUnion.from_points(grid))
        assert sup_metric(v, w) == pytest.approx(0.125)

    def test_points_within_eps_join_the_cut(self, line, quick_start):
        u, _ = quick_start
        w = project_to_grid(u, [0.0, 0.9, 1.5, 2.1, 3.0], 0.8)
        assert w.cut(1.0) == IntervalUnion.from_points([0.9, 1.5, 2.1])
        assert sup_metric(u, w) <= 0.8

    def test_finite_space(self, three_points):
        v = StepFuzzySet.from_membership(three_points, {"0": 1.0, "1": 0.4})
        assert project_to_grid(v, ["0", "1"], 0.5) == v

    def test_grid_too_coarse(self, line):
        v = StepFuzzySet.characteristic(line, closed(0, 1))
        with pytest.raises(PreconditionError):
            project_to_grid(v, [0.0, 1.0], 0.3)

    def test_empty_grid(self, line):
        with pytest.raises(PreconditionError):
            project_to_grid(StepFuzzySet.characteristic(line, closed(0, 1)), [], 0.3)

    @pytest.mark.slow
    @settings(derandomize=True, max_examples=200, deadline=None)
    @given(line_step_sets(), EPS)
    def test_bound_holds(self, v, eps):
        grid = []
        for iv in v.cut(0.0):
            count = max(2, int(math.ceil((iv.hi - iv.lo) / 0.05)) + 1)
            grid.extend(np.linspace(iv.lo, iv.hi, count).tolist())
        w = project_to_grid(v, grid, eps)
        assert sup_metric(v, w) <= eps + 1e-9


class TestFlatten:
    def test_ghost_is_absorbed(self):
        limit = make_family("nce").limit
        out = flatten_below(limit, 0.2)
        assert out.cut(0.1) == frozenset({"0", "1"})
        assert out.cut(0.5) == frozenset({"0"})
        assert send_metric(limit, arrow_forward(out)) == pytest.approx(0.2)
        assert is_arrow_image(arrow_forward(out))

    def test_needs_compact_support(self, line):
        ray = StepFuzzySet.characteristic(line, IntervalUnion([Interval(0.0, math.inf)]))
        with pytest.raises(UsageError, match="compact"):
            flatten_below(ray, 0.2)

    @pytest.mark.parametrize("eps", [0.0, 1.0, 1.5])
    def test_eps_in_open_unit_interval(self, quick_start, eps):
        with pytest.raises(UsageError):
            flatten_below(quick_start[0], eps)

    @pytest.mark.slow
    @settings(derandomize=True, max_examples=200, deadline=None)
    @given(line_step_sets(), EPS)
    def test_bound_holds(self, u, eps):
        out = flatten_below(u, eps)
        assert send_metric(u, out) <= eps + 1e-9
        assert out.cut(0.0) == u.cut(0.0)


class TestTruncate:
    def test_low_band_is_cut_off(self, line):
        u = StepFuzzySet(line, [0.2, 1.0], [closed(0, 5), closed(1, 2)])
        out = truncate_above(u, 0.3)
        assert out == StepFuzzySet.characteristic(line, closed(1, 2))
        assert end_metric(u, out) == pytest.approx(0.2)

    def test_unbounded_cut(self, line):
        ray = StepFuzzySet.characteristic(line, IntervalUnion([Interval(0.0, math.inf)]))
        with pytest.raises(DomainError):
            truncate_above(ray, 0.3)

    def test_sendograph_elements_are_rejected(self, line):
        v = SendoElement(StepFuzzySet.characteristic(line, closed(0, 1)), ghost=[2.0])
        with pytest.raises(UsageError):
            truncate_above(v, 0.3)

    @pytest.mark.slow
    @settings(derandomize=True, max_examples=200, deadline=None)
    @given(line_step_sets(), EPS)
    def test_bound_holds(self, u, eps):
        out = truncate_above(u, eps)
        assert end_metric(u, out) <= eps + 1e-9
        assert out.cut(eps) == u.cut(eps)


class TestClosedness:
    def test_level_metrics_miss_ghosts(self, line):
        base = StepFuzzySet.characteristic(line, closed(0, 1))
        ghosted = SendoElement(base, ghost=[2.0])
        assert closedness_within([base, ghosted], "dp").collisions == [(0, 1)]
        report = closedness_within([base, ghosted], "hsend")
        assert report.collisions == []
        assert report.matrix[0, 1] == pytest.approx(1.0)

    def test_refined_ladders_are_the_same_set(self, quick_start):
        u, _ = quick_start
        report = closedness_within([u, u.with_threshold(0.3)], "dinf")
        assert report.collisions == []
        assert report.to_dict()["matrix"][0][1] == 0.0
