import math

import pytest
from hypothesis import given, settings

from fuzzy_metric import BandFuzzySet, FiniteSpace, IntervalUnion, RealLine, SendoElement, StepFuzzySet
from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.fuzzy import (
    arrow_back,
    arrow_forward,
    as_sendo,
    classify_levels,
    cut,
    ensure_valid,
    from_oracle,
    is_arrow_image,
    level_continuity,
    merged_ladder,
    pfbe_conditions,
    strict_cut,
    v_prime,
    validate,
)
from fuzzy_metric.intervals import Interval

from conftest import line_step_sets


def closed(lo, hi):
    return IntervalUnion.closed(lo, hi)


class TestStepFuzzySet:
    def test_cuts_follow_the_ladder(self, quick_start):
        u, _ = quick_start
        assert u.cut(0.0) == closed(0, 3)
        assert u.cut(0.2) == closed(0, 3)
        assert u.cut(0.5) == closed(0, 3)
        assert u.cut(0.7) == closed(1, 2)
        assert u.strict_cut(0.5) == closed(1, 2)
        assert u.strict_cut(1.0).is_empty()

    def test_functional_cut_spelling(self, quick_start):
        u, _ = quick_start
        assert cut(u, 0.7) == u.cut(0.7)
        assert strict_cut(u, 0.2) == u.strict_cut(0.2)

    def test_membership(self, quick_start):
        u, _ = quick_start
        assert u.membership(0.5) == 0.5
        assert u.membership(1.5) == 1.0
        assert u.membership(4.0) == 0.0

    def test_level_out_of_range(self, quick_start):
        u, _ = quick_start
        with pytest.raises(UsageError):
            u.cut(1.5)

    def test_shape_checked_at_construction(self, line):
        with pytest.raises(ValueError):
            StepFuzzySet(line, [0.5, 1.0], [closed(0, 1)])
        with pytest.raises(ValueError):
            StepFuzzySet(line, [], [])

    def test_added_threshold_is_the_same_set(self, quick_start):
        u, _ = quick_start
        refined = u.with_threshold(0.3)
        assert refined.thresholds == (0.3, 0.5, 1.0)
        assert refined == u
        assert hash(refined) == hash(u)
        assert refined.canonical().thresholds == u.thresholds

    def test_from_membership(self, three_points):
        u = StepFuzzySet.from_membership(three_points, {"0": 1.0, "1": 0.4, "3": 0.0})
        assert u.thresholds == (0.4, 1.0)
        assert u.cut(0.2) == frozenset({"0", "1"})
        assert u.cut(0.0) == frozenset({"0", "1"})

    def test_from_membership_needs_a_grade(self, three_points):
        with pytest.raises(ValueError):
            StepFuzzySet.from_membership(three_points, {"0": 0.0})

    def test_levels_class(self, line):
        assert StepFuzzySet.characteristic(line, closed(0, 1)).levels_class() == "USCB"
        ray = IntervalUnion([Interval(-math.inf, 0.0)])
        assert StepFuzzySet.characteristic(line, ray).levels_class() == "USC"


class TestOracle:
    def test_right_endpoint_sampling(self, line):
        def oracle(a):
            return IntervalUnion([Interval(0.0, math.inf)]) if a == 0 else closed(0, 1 / a)

        u = from_oracle(line, oracle, [0.5, 1.0])
        assert u.thresholds == (0.5, 1.0)
        assert u.cut(0.3) == closed(0, 2)
        kept = from_oracle(line, oracle, [0.5, 1.0], preserve_support=True)
        assert not kept.cut(0.3).is_bounded()

    def test_empty_top_cut(self, line):
        with pytest.raises(DomainError):
            from_oracle(line, lambda a: IntervalUnion.empty(), [1.0])

    def test_merged_ladder(self, quick_start):
        u, v = quick_start
        assert merged_ladder(u, v, extra=[0.25, 0.0, 2.0]) == [0.25, 0.5, 1.0]


class TestValidation:
    def test_valid_set(self, quick_start):
        report = validate(quick_start[0])
        assert report.ok
        assert report.mode == "USCB"
        assert report.summary() == "valid steps (USCB)"

    @pytest.mark.parametrize(
        "thresholds,cuts,clause",
        [
            ([0.5, 0.9], [closed(0, 3), closed(1, 2)], "ladder"),
            ([0.5, 0.5, 1.0], [closed(0, 3), closed(0, 3), closed(1, 2)], "ladder"),
            ([0.5, 1.0], [closed(1, 2), closed(0, 3)], "(ii)"),
            ([0.5, 1.0], [closed(0, 3), IntervalUnion.empty()], "normality"),
            ([1.0], [IntervalUnion.open(0, 1)], "(i)"),
        ],
    )
    def test_violations_name_their_clause(self, line, thresholds, cuts, clause):
        report = validate(StepFuzzySet(line, thresholds, cuts))
        assert not report.ok
        assert clause in report.clauses()

    def test_ensure_valid_raises_usage_error(self, line):
        with pytest.raises(UsageError, match=r"\(ii\)"):
            ensure_valid(StepFuzzySet(line, [0.5, 1.0], [closed(1, 2), closed(0, 3)]))

    def test_report_lists_every_violation(self, line):
        u = StepFuzzySet(line, [0.5, 0.9], [closed(1, 2), IntervalUnion.open(0, 3)])
        clauses = validate(u).clauses()
        assert {"ladder", "(i)", "(ii)"} <= set(clauses)
        assert validate(u).to_dict()["valid"] is False

    def test_ghost_must_be_closed(self, line):
        v = SendoElement(StepFuzzySet.singleton(line, 0.0), ghost=IntervalUnion.open(2, 3))
        assert validate(v).clauses() == ["ghost"]

    def test_band_pieces(self):
        overlapping = BandFuzzySet([(closed(0, 2), 1.0), (closed(1, 3), 0.5)])
        assert "pieces" in validate(overlapping).clauses()
        subnormal = BandFuzzySet([(closed(0, 2), 0.5)])
        assert "normality" in validate(subnormal).clauses()
        assert validate(BandFuzzySet([(closed(0, 2), 0.5)], normal=False)).ok

    @settings(derandomize=True, max_examples=50)
    @given(line_step_sets())
    def test_generated_sets_are_valid(self, u):
        assert validate(u).ok


class TestSendo:
    @pytest.fixture
    def two_points(self):
        return FiniteSpace.discrete(["0", "1"])

    def test_ghost_only_changes_the_zero_level(self, two_points):
        v = SendoElement(StepFuzzySet.singleton(two_points, "0"), ghost=["1"])
        assert v.zero_level() == frozenset({"0", "1"})
        assert v.cut(0.5) == frozenset({"0"})
        assert v.membership("1") == 0.0

    def test_ghost_outside_the_closure_is_no_image(self, two_points):
        v = SendoElement(StepFuzzySet.singleton(two_points, "0"), ghost=["1"])
        report = pfbe_conditions(v)
        assert not report.is_image
        assert not is_arrow_image(v)
        assert report.mode == "USCB"
        assert report.consistent()
        assert set(report.conditions) == {"i", "ii", "iii", "iv", "v", "vi"}

    def test_images_satisfy_every_condition(self, quick_start):
        v = arrow_forward(quick_start[0])
        report = pfbe_conditions(v)
        assert all(report.conditions.values())
        assert arrow_back(v) == quick_start[0]
        assert v_prime(v) == v

    def test_ghost_inside_the_closure_is_absorbed(self, line):
        base = StepFuzzySet.characteristic(line, closed(0, 1))
        v = SendoElement(base, ghost=[0.5])
        assert is_arrow_image(v)
        assert v == arrow_forward(base)

    def test_unbounded_zero_level_is_usc_mode(self, line):
        ray = StepFuzzySet.characteristic(line, IntervalUnion([Interval(-math.inf, 0.0)]))
        v = SendoElement(ray, ghost=[5.0])
        report = pfbe_conditions(v)
        assert report.mode == "USC"
        assert report.consistent()
        assert not report.is_image

    def test_as_sendo_rejects_bands(self):
        with pytest.raises(TypeError):
            as_sendo(BandFuzzySet([(closed(0, 1), 1.0)]))


class TestLevels:
    def test_band_set_with_open_top(self):
        u = BandFuzzySet([(IntervalUnion.open(0, 1), 1.0), (closed(1, 3), 0.6)])
        report = classify_levels(u)
        assert report.D == IntervalUnion.from_points([0.6])
        assert report.P.is_empty()
        assert report.F == IntervalUnion.open(0, 1)
        assert report.chain_holds()

    def test_step_set_levels(self, quick_start):
        u, _ = quick_start
        report = classify_levels(u)
        point = IntervalUnion.from_points([0.5])
        assert report.D == point
        assert report.P == point
        assert report.F == point
        assert report.P0 == point

    def test_jumps(self, quick_start):
        (jump,) = level_continuity(quick_start[0])
        assert jump.level == 0.5
        assert jump.left == 0.0
        assert jump.right == 1.0

    def test_crisp_sets_have_no_special_levels(self, line):
        report = classify_levels(StepFuzzySet.characteristic(line, closed(0, 1)))
        for levels in report.as_dict().values():
            assert levels.is_empty()

    @settings(derandomize=True, max_examples=50)
    @given(line_step_sets())
    def test_chain_holds_for_step_sets(self, u):
        report = classify_levels(u)
        assert report.chain_holds()
        assert report.P0.is_subset(report.F)
