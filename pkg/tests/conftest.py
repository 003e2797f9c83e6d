"""Shared fixtures and hypothesis generators of valid step fuzzy sets.

Every generator draws sets on a tenth grid so the exact metrics land on
representable values, and builds cuts top-down so nesting holds by
construction.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import pytest
from hypothesis import strategies as st

from fuzzy_metric import EuclideanSpace, FiniteSpace, IntervalUnion, RealLine, StepFuzzySet
from fuzzy_metric.intervals import Interval

# thresholds are drawn from this grid and always end at 1
LEVEL_GRID = [0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9]


@pytest.fixture
def line() -> RealLine:
    return RealLine()


@pytest.fixture
def quick_start(line) -> Tuple[StepFuzzySet, StepFuzzySet]:
    """``[0, 3]`` at 0.5 and ``[1, 2]`` at 1, against the crisp point 1.5."""
    u = StepFuzzySet(line, [0.5, 1.0], [IntervalUnion.closed(0, 3), IntervalUnion.closed(1, 2)])
    return u, StepFuzzySet.singleton(line, 1.5)


@pytest.fixture
def three_points() -> FiniteSpace:
    return FiniteSpace.from_points([0, 1, 3])


@pytest.fixture
def plane() -> EuclideanSpace:
    return EuclideanSpace(2)


@st.composite
def thresholds(draw, max_levels: int = 3) -> List[float]:
    lower = draw(st.lists(st.sampled_from(LEVEL_GRID), max_size=max_levels - 1, unique=True))
    return sorted(lower) + [1.0]


@st.composite
def closed_interval(draw, lo: int = 0, hi: int = 30) -> Interval:
    a = draw(st.integers(lo, hi))
    b = draw(st.integers(a, hi))
    return Interval.closed(a / 10, b / 10)


@st.composite
def line_step_sets(draw, hi: int = 30, max_levels: int = 3) -> StepFuzzySet:
    """Bounded step sets on ``[0, hi / 10]`` with closed cuts."""
    levels = draw(thresholds(max_levels))
    top = IntervalUnion(draw(st.lists(closed_interval(0, hi), min_size=1, max_size=2)))
    cuts = [top]
    for _ in levels[:-1]:
        extra = IntervalUnion(draw(st.lists(closed_interval(0, hi), max_size=2)))
        cuts.append(cuts[-1] | extra)
    return StepFuzzySet(RealLine(), levels, list(reversed(cuts)))


def _nested_subsets(draw, labels: Sequence, count: int) -> List[List]:
    top = draw(st.lists(st.sampled_from(list(labels)), min_size=1, unique=True))
    cuts = [top]
    for _ in range(count - 1):
        extra = draw(st.lists(st.sampled_from(list(labels)), unique=True))
        cuts.append(sorted(set(cuts[-1]) | set(extra), key=list(labels).index))
    return list(reversed(cuts))


@st.composite
def finite_spaces(draw) -> FiniteSpace:
    xs = draw(st.lists(st.integers(0, 40), min_size=2, max_size=6, unique=True))
    return FiniteSpace.from_points(sorted(x / 4 for x in xs))


@st.composite
def finite_step_sets(draw, space: FiniteSpace) -> StepFuzzySet:
    levels = draw(thresholds())
    return StepFuzzySet(space, levels, _nested_subsets(draw, space.labels, len(levels)))


@st.composite
def plane_clouds(draw) -> List[Tuple[float, float]]:
    coords = st.integers(-10, 10).map(lambda k: k / 2)
    return draw(st.lists(st.tuples(coords, coords), min_size=2, max_size=6, unique=True))


@st.composite
def cloud_step_sets(draw, cloud: Sequence[Tuple[float, float]]) -> StepFuzzySet:
    levels = draw(thresholds())
    return StepFuzzySet(EuclideanSpace(2), levels, _nested_subsets(draw, cloud, len(levels)))


@st.composite
def step_pairs(draw, backend: str) -> Tuple[StepFuzzySet, StepFuzzySet]:
    """Two valid step sets over one shared space of the named backend."""
    if backend == "line":
        return draw(line_step_sets()), draw(line_step_sets())
    if backend == "finite":
        space = draw(finite_spaces())
        return draw(finite_step_sets(space)), draw(finite_step_sets(space))
    cloud = draw(plane_clouds())
    return draw(cloud_step_sets(cloud)), draw(cloud_step_sets(cloud))


@st.composite
def ground_points(draw, backend: str):
    """A space and two of its points."""
    if backend == "line":
        x, y = draw(st.integers(-50, 50)), draw(st.integers(-50, 50))
        return RealLine(), x / 10, y / 10
    if backend == "finite":
        space = draw(finite_spaces())
        x, y = draw(st.sampled_from(space.labels)), draw(st.sampled_from(space.labels))
        return space, x, y
    cloud = draw(plane_clouds())
    return EuclideanSpace(2), draw(st.sampled_from(cloud)), draw(st.sampled_from(cloud))
