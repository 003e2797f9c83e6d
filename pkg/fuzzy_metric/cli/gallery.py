"""Scripted worked examples, each checked against its known closed-form values."""

from __future__ import annotations

import logging
import math
from typing import Any, Callable, Dict, List, Optional

from fuzzy_metric.convergence.families import make_family
from fuzzy_metric.convergence.sequences import level_decomposition_test
from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.extreal import ABS_TOL, ext_isclose, format_ext
from fuzzy_metric.core.space import EuclideanSpace, FiniteSpace, RealLine
from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.levels import classify_levels
from fuzzy_metric.fuzzy.sendo import arrow_forward, is_arrow_image
from fuzzy_metric.fuzzy.step import StepFuzzySet
from fuzzy_metric.intervals.interval import Interval, IntervalUnion
from fuzzy_metric.metrics.graph import end_metric, send_metric
from fuzzy_metric.metrics.level import dp_metric, dp_via_oracle, sup_metric

logger = logging.getLogger(__name__)


class GalleryRow:
    __slots__ = ("check", "expected", "computed", "passed")

    def __init__(self, check: str, expected: Any, computed: Any, passed: bool):
        self.check = check
        self.expected = expected
        self.computed = computed
        self.passed = bool(passed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "expected": _show(self.expected),
            "computed": _show(self.computed),
            "passed": self.passed,
        }


class GalleryResult:
    def __init__(self, name: str, title: str, rows: List[GalleryRow]):
        self.name = name
        self.title = title
        self.rows = rows

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gallery": self.name,
            "title": self.title,
            "passed": self.passed,
            "rows": [r.to_dict() for r in self.rows],
        }


def _show(value: Any) -> Any:
    if isinstance(value, float):
        v = format_ext(value)
        return v if isinstance(v, str) else float(f"{v:.12g}")
    if isinstance(value, (bool, int, str)):
        return value
    return repr(value)


def _close(check: str, expected: float, computed: float, tol: float = ABS_TOL) -> GalleryRow:
    return GalleryRow(check, expected, computed, ext_isclose(expected, computed, tol))


def _at_most(check: str, bound: float, computed: float) -> GalleryRow:
    return GalleryRow(check, f"<= {bound:.6g}", computed, computed <= bound)


# individual examples


def pdr(**_: Any) -> GalleryResult:
    """Two bands: (0, 1) at 1 and [1, 3] at 0.6."""
    u = BandFuzzySet([(IntervalUnion.open(0, 1), 1.0), (IntervalUnion.closed(1, 3), 0.6)])
    report = classify_levels(u)
    expected = {
        "D": IntervalUnion([Interval.point(0.6)]),
        "P": IntervalUnion.empty(),
        "F": IntervalUnion.open(0, 1),
    }
    rows = [GalleryRow(k, v, getattr(report, k), getattr(report, k) == v) for k, v in expected.items()]
    rows.append(GalleryRow("P ⊆ D ⊆ F", True, report.chain_holds(), report.chain_holds()))
    return GalleryResult("pdr", "discontinuity and platform levels of a band set", rows)


def nce(n: int = 10, **_: Any) -> GalleryResult:
    family = make_family("nce")
    w = family.limit
    rows = []
    for k in range(1, n + 1):
        rows.append(_close(f"H_send(→u_{k}, w)", 1.0 / k, send_metric(arrow_forward(family.member(k)), w)))
    for k in range(1, n):
        rows.append(_close(f"d_inf(u_{k}, u_{k + 1})", 1.0, sup_metric(family.member(k), family.member(k + 1))))
    image = is_arrow_image(w)
    rows.append(GalleryRow("w is an arrow image", False, image, not image))
    members_ok = all(is_arrow_image(arrow_forward(family.member(k))) for k in range(1, n + 1))
    rows.append(GalleryRow("every →u_n is an arrow image", True, members_ok, members_ok))
    return GalleryResult("nce", "a Cauchy sequence of sendograph images without an image limit", rows)


def snp(n: int = 4, p: float = 2.0, levels: int = 10_000, resolution: int = 400, **_: Any) -> GalleryResult:
    family = make_family("snp", resolution=resolution)
    rows = []
    k = 1
    while k <= n:
        exact = k ** (2.0 - 1.0 / p)
        est = dp_via_oracle(family.oracle(k), family.limit_oracle, p=p, m=levels)
        rows.append(GalleryRow(f"d_{p:g}(u_{k}, u)", exact, est.value, abs(est.value - exact) <= 0.01 * exact))
        rows.append(_at_most(f"H_send(u_{k}, u)", 1.0 / k + family.pitch, send_metric(family.member(k), family.limit)))
        k *= 2
    return GalleryResult("snp", "sendograph convergence with growing d_p", rows)


def snc(n: int = 50, resolution: int = 400, **_: Any) -> GalleryResult:
    family = make_family("snc", resolution=resolution)
    line = family.space
    third = 1.0 / 3.0
    limit_cut = family.limit_oracle(third)
    rows = []
    for k in range(1, n + 1):
        member_cut = family.oracle(k)(third)
        forward = line.directed_hausdorff(limit_cut, member_cut)
        rows.append(GalleryRow(f"H*([u]_1/3, [u_{k}]_1/3)", math.inf, forward, forward == math.inf))
        backward = line.directed_hausdorff(member_cut, limit_cut)
        rows.append(_close(f"H*([u_{k}]_1/3, [u]_1/3)", 0.0, backward))
        bound = 1.0 / (3 * k) + 2 * family.pitch
        rows.append(_at_most(f"H_end(u_{k}, u)", bound, end_metric(family.member(k), family.limit)))
    return GalleryResult("snc", "endograph convergence with an infinite cut distance", rows)


def fnc(n: int = 60, resolution: int = 400, **_: Any) -> GalleryResult:
    family = make_family("fnc", resolution=resolution)
    line = family.space
    limit_top = family.limit_oracle(1.0)
    rows = []
    last = math.inf
    for k in range(1, n + 1):
        top = line.directed_hausdorff(family.oracle(k)(1.0), limit_top)
        rows.append(GalleryRow(f"H*([u_{k}]_1, [u]_1)", math.inf, top, top == math.inf))
        last = end_metric(family.member(k), family.limit)
        rows.append(_at_most(f"H_end(u_{k}, u)", 1.0 / k + family.pitch, last))
    if n > 50:
        rows.append(_at_most(f"H_end(u_{n}, u)", 0.02, last))
    return GalleryResult("fnc", "endograph convergence with a diverging top cut", rows)


def shrinking_band(n: int = 10, **_: Any) -> GalleryResult:
    family = make_family("shrinking-band")
    u = family.limit
    line = family.space
    rows = []
    for k in range(1, n + 1):
        rows.append(_close(f"H_end(u_{k}, 0̂)", 1.0 / k, end_metric(family.member(k), u)))
        if k >= 3:
            d = line.hausdorff(family.member(k).cut(0.5), u.cut(0.5))
            rows.append(_close(f"H([u_{k}]_0.5, [0̂]_0.5)", 0.0, d))
    return GalleryResult("shrinking-band", "endograph convergence to a point", rows)


def platform(n: int = 40, **_: Any) -> GalleryResult:
    family = make_family("platform")
    diag = level_decomposition_test(family, levels=[i / 10 for i in range(1, 10)], n_max=n)
    rows = [
        GalleryRow("non-vanishing levels", "[0.5]", str(diag.flags["non_vanishing"]), diag.flags["non_vanishing"] == [0.5]),
        GalleryRow("0.5 in P0(u)", True, 0.5 in diag.flags["in_p0"], 0.5 in diag.flags["in_p0"]),
    ]
    stuck = diag.levels[0.5]
    rows.append(GalleryRow("H([u_n]_0.5, [u]_0.5) for all n", 1.0, float(stuck.min()), bool((stuck == 1.0).all())))
    for k, h in zip(diag.indices, diag.metrics["h_end"]):
        rows.append(_at_most(f"H_end(u_{k}, u)", 1.0 / k + ABS_TOL, float(h)))
    return GalleryResult("platform", "per-level convergence fails only at the platform", rows)


def emc(**_: Any) -> GalleryResult:
    """Distances between crisp points."""
    cases: List[tuple] = [
        ("real line", RealLine(), 0.0, 3.0, 3.0),
        ("finite", FiniteSpace.from_points([0.0, 3.0]), "0", "3", 3.0),
        ("euclidean", EuclideanSpace(2), (0.0, 0.0), (3.0, 4.0), 5.0),
    ]
    rows = []
    for label, space, x, y, d in cases:
        a = StepFuzzySet.singleton(space, x)
        b = StepFuzzySet.singleton(space, y)
        rows.append(_close(f"{label}: H_send", d, send_metric(a, b)))
        rows.append(_close(f"{label}: H_end", min(d, 1.0), end_metric(a, b)))
        rows.append(_close(f"{label}: d_inf", d, sup_metric(a, b)))
        rows.append(_close(f"{label}: d_2", d, dp_metric(a, b, 2.0)))
    return GalleryResult("emc", "crisp points embed isometrically", rows)


GALLERY: Dict[str, Callable[..., GalleryResult]] = {
    "pdr": pdr,
    "nce": nce,
    "snp": snp,
    "snc": snc,
    "fnc": fnc,
    "shrinking-band": shrinking_band,
    "platform": platform,
    "emc": emc,
}

GALLERY.update({"remark45": shrinking_band, "platform-fail": platform})


def run_gallery(name: str, n: Optional[int] = None, **params: Any) -> GalleryResult:
    try:
        fn = GALLERY[name]
    except KeyError:
        raise UsageError(f"unknown gallery {name!r}; choose from {sorted(GALLERY)}") from None
    if n is not None:
        params["n"] = n
    result = fn(**{k: v for k, v in params.items() if v is not None})
    result.name = name
    logger.info("gallery %s: %s", name, "pass" if result.passed else "FAIL")
    return result
