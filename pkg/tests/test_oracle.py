import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzy_metric import IntervalUnion, StepFuzzySet, end_metric, send_metric
from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.intervals import Interval
from fuzzy_metric.metrics import dp_via_oracle, graph_grid_oracle, height_profile

from conftest import cloud_step_sets, finite_spaces, finite_step_sets, line_step_sets, plane_clouds

PITCH = 1e-3


@pytest.mark.slow
@settings(derandomize=True, max_examples=500, deadline=None)
@given(line_step_sets(), line_step_sets())
def test_closed_forms_match_the_line_grid(u, v):
    for kind, exact in (("send", send_metric(u, v)), ("end", end_metric(u, v))):
        assert exact == pytest.approx(graph_grid_oracle(u, v, PITCH, kind), abs=2 * PITCH)


@pytest.mark.slow
@settings(derandomize=True, max_examples=500, deadline=None)
@given(st.data())
def test_closed_forms_match_the_point_grid(data):
    space = data.draw(finite_spaces())
    u, v = data.draw(finite_step_sets(space)), data.draw(finite_step_sets(space))
    pitch = 1e-2
    assert send_metric(u, v) == pytest.approx(graph_grid_oracle(u, v, pitch, "send"), abs=2 * pitch)
    assert end_metric(u, v) == pytest.approx(graph_grid_oracle(u, v, pitch, "end"), abs=2 * pitch)


@pytest.mark.slow
@settings(derandomize=True, max_examples=500, deadline=None)
@given(st.data())
def test_closed_forms_match_the_cloud_grid(data):
    cloud = data.draw(plane_clouds())
    u, v = data.draw(cloud_step_sets(cloud)), data.draw(cloud_step_sets(cloud))
    pitch = 1e-2
    assert send_metric(u, v) == pytest.approx(graph_grid_oracle(u, v, pitch, "send"), abs=2 * pitch)


def test_quick_start_on_the_grid(quick_start):
    u, v = quick_start
    assert graph_grid_oracle(u, v, PITCH, "end") == pytest.approx(0.5, abs=2 * PITCH)
    assert graph_grid_oracle(u, v, PITCH, "send") == pytest.approx(1.5, abs=2 * PITCH)


def test_height_profile_is_nondecreasing(quick_start):
    u, v = quick_start
    profile = height_profile(u, v, 0.5)
    assert np.all(np.diff(profile) >= -1e-12)
    assert profile[-1] == pytest.approx(1.0, abs=1e-2)


def test_unbounded_sets_are_rejected(line):
    ray = StepFuzzySet.characteristic(line, IntervalUnion([Interval(-math.inf, 0.0)]))
    with pytest.raises(DomainError):
        graph_grid_oracle(ray, StepFuzzySet.singleton(line, 0.0))


def test_kind_and_pitch_checked(quick_start):
    with pytest.raises(UsageError):
        graph_grid_oracle(*quick_start, kind="zero")
    with pytest.raises(UsageError):
        graph_grid_oracle(*quick_start, pitch=0.0)


def test_dp_oracle_samples_band_right_endpoints():
    def u(a):
        return IntervalUnion.closed(0, 1) if a <= 0.7 else IntervalUnion.from_points([0.0])

    def v(a):
        return IntervalUnion.from_points([0.0])

    estimate = dp_via_oracle(u, v, p=1, m=4)
    assert estimate.value == pytest.approx(0.5)
    assert estimate.refined == pytest.approx(0.625)
    assert estimate.error == pytest.approx(0.125)
