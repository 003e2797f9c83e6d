import math

import pytest

from fuzzy_metric import IntervalUnion, StepFuzzySet, end_metric, send_metric, sup_metric
from fuzzy_metric.convergence import (
    FAMILIES,
    SequenceDiagnostics,
    SequenceFamily,
    cauchy_union_limit,
    decomposition_trajectory,
    dominated_convergence_check,
    equi_rc_modulus,
    gamma_residuals,
    level_decomposition_test,
    make_family,
    map_indices,
    send_characterization,
    trend,
    uniform_ladder,
    vanishing,
)
from fuzzy_metric.core.errors import DomainError, PostconditionError, UsageError
from fuzzy_metric.fuzzy import arrow_forward, is_arrow_image
from fuzzy_metric.metrics import dp_via_oracle


class TestTrend:
    @pytest.mark.parametrize(
        "values,verdict",
        [
            ([1.0, 0.5, 0.25, 0.0], "vanished"),
            ([1.0, 0.8, 0.6, 0.4], "decreasing"),
            ([1.0, 1.0, 1.0, 1.0], "persistent"),
            ([1.0, 2.0, 3.0, 4.0], "growing"),
            ([1.0, math.inf], "infinite"),
        ],
    )
    def test_verdicts(self, values, verdict):
        assert trend(values) == verdict

    def test_only_a_small_tail_vanishes(self):
        assert vanishing([1.0, 0.5, 0.25, 0.0])
        assert not vanishing([1.0, 0.8, 0.6, 0.4])
        assert not vanishing([1.0, 1.0])
        assert not vanishing([1.0, math.inf])

    def test_levelling_off_is_decreasing_but_not_vanishing(self):
        values = [1.0 + 10.0 / n for n in range(1, 21)]
        assert trend(values) == "decreasing"
        assert not vanishing(values)
        assert not vanishing(values, tol=1.0)
        assert vanishing(values, tol=2.0)

    def test_tolerance(self):
        assert trend([1.0, 0.05], tol=0.1) == "vanished"

    def test_empty_trajectory(self):
        with pytest.raises(UsageError):
            trend([])


class TestDiagnostics:
    def test_negative_entries_are_a_bug(self):
        diag = SequenceDiagnostics("x", [1, 2])
        with pytest.raises(PostconditionError):
            diag.add_metric("h_end", [0.5, -0.1])

    def test_rows_and_label(self):
        diag = SequenceDiagnostics("x", [1, 2])
        diag.add_metric("h_end", [1.0, math.inf])
        diag.add_level(0.5, [0.0, 0.0])
        assert diag.label == "diagnostic at N=2"
        rows = diag.to_rows()
        assert rows[0] == {"series": "h_end", "level": "", "n": 1, "value": 1.0}
        assert rows[1]["value"] == "+inf"
        assert rows[2] == {"series": "level", "level": 0.5, "n": 1, "value": 0.0}
        assert diag.to_dict()["verdicts"] == {"h_end": "infinite"}

    def test_map_indices_keeps_order(self):
        assert map_indices(lambda n: n * n, [1, 2, 3, 4], workers=3) == [1, 4, 9, 16]


class TestFamilies:
    def test_registry(self):
        assert set(FAMILIES) == {
            "shrinking-band", "platform", "snc", "fnc", "snp", "nce", "constant", "growing", "dp-unbounded",
            "remark45", "platform-fail",
        }

    @pytest.mark.parametrize("published,name", [("remark45", "shrinking-band"), ("platform-fail", "platform")])
    def test_published_ids_build_the_same_family(self, published, name):
        a, b = make_family(published), make_family(name)
        assert a.limit == b.limit
        assert [a.member(n) for n in (1, 2, 7)] == [b.member(n) for n in (1, 2, 7)]

    def test_unknown_family(self):
        with pytest.raises(UsageError, match="unknown family"):
            make_family("zeno")

    def test_foreign_parameters_are_ignored(self):
        fam = make_family("snc", resolution=50, bands=3)
        assert fam.pitch == pytest.approx(0.02)
        assert fam.tol == pytest.approx(0.2)
        assert not fam.exact

    def test_indices_start_at_one(self):
        with pytest.raises(UsageError):
            make_family("shrinking-band").member(0)

    def test_bounded_family(self):
        fam = make_family("dp-unbounded", bands=4)
        assert fam.limit == fam.member(4)
        with pytest.raises(UsageError):
            fam.member(5)

    def test_no_limit(self):
        with pytest.raises(UsageError, match="no candidate limit"):
            make_family("growing").require_limit()

    def test_supplied_members(self, line):
        members = [StepFuzzySet.singleton(line, 1.0 / n) for n in range(1, 9)]
        fam = SequenceFamily.from_members("points", members, limit=StepFuzzySet.singleton(line, 0.0))
        diag = decomposition_trajectory(fam, n_max=8)
        assert diag.metrics["h_send"].tolist() == pytest.approx([1.0 / n for n in range(1, 9)])
        assert diag.verdict("h_send") == "decreasing"
        assert not diag.vanishes("h_send")

    def test_supplied_members_reaching_the_limit(self, line):
        origin = StepFuzzySet.singleton(line, 0.0)
        members = [StepFuzzySet.singleton(line, 1.0 / n) for n in range(1, 5)] + [origin] * 4
        diag = decomposition_trajectory(SequenceFamily.from_members("points", members, limit=origin), n_max=8)
        assert diag.verdict("h_send") == "vanished"
        assert diag.vanishes("h_send")
        assert diag.flags["implications"] == {"send": True, "dp": True}

    def test_uniform_ladder(self):
        ladder = uniform_ladder(4, [1 / 3, 0.0, 1.5])
        assert ladder == [0.25, 1 / 3, 0.5, 0.75, 1.0]
        with pytest.raises(UsageError):
            uniform_ladder(0)


class TestShrinkingBand:
    def test_endograph_distance(self):
        fam = make_family("shrinking-band")
        for n in (1, 2, 5, 20):
            assert end_metric(fam.member(n), fam.limit) == pytest.approx(1.0 / n)

    def test_trajectory(self):
        diag = decomposition_trajectory(make_family("shrinking-band"), n_max=20)
        assert diag.verdict("h_end") == "decreasing"
        assert diag.verdict("d_p") == "decreasing"
        assert diag.verdict("h_send") == "persistent"
        assert diag.verdict("h_zero") == "persistent"
        assert diag.flags["implications"] == {"send": True, "dp": True}
        assert diag.flags["secf_violations"] == []
        assert diag.flags["chain_violations"] == {}

    def test_dominated(self):
        report = dominated_convergence_check(make_family("shrinking-band"), n_max=20)
        assert report.integrable
        assert report.integral == pytest.approx(1.0)
        assert report.consistent is True

    def test_gamma_residuals(self):
        diag = gamma_residuals(make_family("shrinking-band"), levels=[0.5], n_max=12)
        assert diag.flags["inner"] == {0.5: "vanished"}
        assert diag.flags["outer_tail_inf"] == {0.5: 0.0}
        assert diag.outer[0.5][0] == pytest.approx(1.0)

    def test_modulus(self):
        diag = equi_rc_modulus(make_family("shrinking-band"), n_max=10, eps=0.5)
        deltas, values = diag.modulus
        assert deltas[0] == pytest.approx(0.1)
        assert values[0] == 0.0
        assert values[-1] == 1.0
        assert diag.flags["equi_right_continuous"]


class TestPlatform:
    def test_only_the_platform_level_fails(self):
        diag = level_decomposition_test(make_family("platform"), n_max=40)
        assert diag.flags["non_vanishing"] == [0.5]
        assert diag.flags["in_p0"] == [0.5]
        assert diag.flags["h_end"] == "decreasing"
        assert not diag.flags["h_end_vanishes"]
        assert diag.flags["unexplained"] == []
        assert set(diag.levels[0.5]) == {1.0}

    def test_needs_a_prefix(self):
        with pytest.raises(UsageError):
            level_decomposition_test(make_family("platform"), n_max=1)


class TestNce:
    def test_images_are_cauchy_with_a_ghost_limit(self):
        fam = make_family("nce")
        for n in range(1, 101):
            assert send_metric(arrow_forward(fam.member(n)), fam.limit) == pytest.approx(1.0 / n, abs=1e-12)
        assert not is_arrow_image(fam.limit)

    def test_members_stay_apart_level_wise(self):
        fam = make_family("nce")
        for n in range(1, 6):
            assert sup_metric(fam.member(n), fam.member(n + 1)) == 1.0

    def test_characterization(self):
        report = send_characterization(make_family("nce"), n_max=40)
        assert report.h_send == "decreasing"
        assert report.h_zero == "vanished"
        assert report.d_p == "decreasing"
        assert report.consistent


class TestSnc:
    def test_cut_at_one_third_is_infinitely_far(self, line):
        fam = make_family("snc", resolution=100)
        target = fam.limit_oracle(1 / 3)
        for n in (1, 5, 50):
            cut = fam.oracle(n)(1 / 3)
            assert line.directed_hausdorff(target, cut) == math.inf
            assert line.directed_hausdorff(cut, target) == 0.0

    def test_endograph_distance_vanishes(self):
        fam = make_family("snc", resolution=100)
        for n in (1, 2, 5, 10):
            assert end_metric(fam.member(n), fam.limit) <= 1 / (3 * n) + 2 * fam.pitch

    def test_failure_level_is_a_platform(self):
        diag = level_decomposition_test(make_family("snc", resolution=100), levels=[1 / 3], n_max=8)
        assert diag.flags["non_vanishing"] == [1 / 3]
        assert diag.flags["in_p0"] == [1 / 3]
        assert diag.flags["unexplained"] == []


class TestFnc:
    def test_top_cuts_diverge(self, line):
        fam = make_family("fnc")
        for n in (1, 10, 60):
            assert line.directed_hausdorff(fam.oracle(n)(1.0), fam.limit_oracle(1.0)) == math.inf

    def test_endograph_distance(self):
        fam = make_family("fnc", resolution=200)
        for n in (2, 5, 10):
            assert end_metric(fam.member(n), fam.limit) <= 1 / n + fam.pitch + 1e-12


class TestSnp:
    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_dp_grows(self, n):
        fam = make_family("snp")
        estimate = dp_via_oracle(fam.oracle(n), fam.limit_oracle, p=2, m=10_000)
        assert estimate.value == pytest.approx(n ** 1.5, rel=1e-2)
        assert estimate.error == pytest.approx(0.0, abs=1e-6)

    def test_sendograph_vanishes_while_dp_grows(self):
        diag = decomposition_trajectory(make_family("snp", resolution=100), n_max=16)
        assert diag.verdict("h_send") == "vanished"
        assert diag.vanishes("h_send")
        assert not diag.vanishes("d_p")
        assert diag.verdict("d_p") == "growing"
        assert diag.flags["implications"]["send"]

    def test_characterization_needs_compact_support(self):
        with pytest.raises(UsageError, match="compact"):
            send_characterization(make_family("snp", resolution=50), n_max=4)


class TestCauchyUnion:
    def test_prefix_unions_stabilize(self, line):
        sets = [IntervalUnion.closed(0, 1 - 1 / n) for n in range(1, 11)]
        report = cauchy_union_limit(line, sets)
        assert report.limit == IntervalUnion.closed(0, 0.9)
        assert report.stabilization[-1] == 0.0
        assert report.stabilized_at(0.05) == 7
        assert report.label == "diagnostic at N=10"

    def test_empty_members(self, line):
        with pytest.raises(DomainError):
            cauchy_union_limit(line, [IntervalUnion.closed(0, 1), IntervalUnion.empty()])
