"""Sequence diagnostics: level decompositions, Γ-residuals, metric decompositions,
equi-right-continuity moduli and prefix unions of Cauchy sequences."""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from fuzzy_metric.convergence.diagnostics import SequenceDiagnostics, map_indices, trend, vanishing
from fuzzy_metric.convergence.families import SequenceFamily
from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.core.extreal import ABS_TOL, ext_add, ext_le
from fuzzy_metric.core.space import ClosedSet, GroundSpace
from fuzzy_metric.fuzzy.levels import classify_levels
from fuzzy_metric.fuzzy.sendo import as_sendo
from fuzzy_metric.fuzzy.step import check_level
from fuzzy_metric.metrics.graph import end_metric
from fuzzy_metric.metrics.report import metric_report

logger = logging.getLogger(__name__)

DEFAULT_TEST_LEVELS = tuple(i / 10 for i in range(1, 10))


def _check_n(n_max: int) -> List[int]:
    if int(n_max) < 2:
        raise UsageError(f"need N >= 2, got {n_max}")
    return list(range(1, int(n_max) + 1))


def _levels(levels: Optional[Sequence[float]]) -> List[float]:
    return sorted({check_level(a) for a in (levels or DEFAULT_TEST_LEVELS)})


def _cut_distance(space: GroundSpace, a: ClosedSet, b: ClosedSet) -> float:
    return 0.0 if a == b else space.hausdorff(a, b)


def level_decomposition_test(
    family: SequenceFamily,
    candidate: Any = None,
    levels: Optional[Sequence[float]] = None,
    n_max: int = 20,
    workers: Optional[int] = None,
) -> SequenceDiagnostics:
    """Per-level trajectories ``H([u_n]_α, [u]_α)`` cross-referenced with ``P_0(u)``.

    Flags ``non_vanishing`` levels (tail maximum not below the family
    tolerance) and the ``unexplained`` ones among them outside ``P_0(u)``.
    Unexplained levels are logged as a warning while ``H_end`` is falling.
    """
    u = as_sendo(family.require_limit(candidate))
    indices = _check_n(n_max)
    alphas = _levels(levels)
    space = u.space
    targets = {a: u.cut(a) for a in alphas}

    def row(n: int) -> Tuple[List[float], float]:
        un = as_sendo(family.member(n))
        return [_cut_distance(space, un.cut(a), targets[a]) for a in alphas], end_metric(un, u)

    results = map_indices(row, indices, workers)
    diag = SequenceDiagnostics(family.name, indices, family.tol)
    diag.add_metric("h_end", [h for _, h in results])
    for j, a in enumerate(alphas):
        diag.add_level(a, [dist[j] for dist, _ in results])

    p0 = classify_levels(u).P0
    non_vanishing = [a for a in alphas if not vanishing(diag.levels[a], diag.tol)]
    in_p0 = [a for a in alphas if p0.contains(a)]
    diag.flags["non_vanishing"] = non_vanishing
    diag.flags["in_p0"] = in_p0
    end_verdict = diag.verdict("h_end")
    diag.flags["h_end"] = end_verdict
    diag.flags["h_end_vanishes"] = diag.vanishes("h_end")
    diag.flags["unexplained"] = [a for a in non_vanishing if a not in in_p0]
    if diag.flags["unexplained"] and end_verdict in ("vanished", "decreasing"):
        logger.warning("%s: non-vanishing levels outside P0: %s", family.name, diag.flags["unexplained"])
    return diag


def gamma_residuals(
    family: SequenceFamily,
    candidate: Any = None,
    levels: Optional[Sequence[float]] = None,
    n_max: int = 20,
    workers: Optional[int] = None,
) -> SequenceDiagnostics:
    """Inner residual ``H*({u > α}, [u_n]_α)`` and outer residual ``H*([u_n]_α, [u]_α)``.

    Along a Γ-convergent sequence the inner residual vanishes and the outer
    one has vanishing tail infimum. An empty strict cut gives inner residual 0.
    """
    u = as_sendo(family.require_limit(candidate))
    indices = _check_n(n_max)
    alphas = _levels(levels)
    space = u.space
    strict = {a: u.strict_cut(a) for a in alphas}
    cuts = {a: u.cut(a) for a in alphas}

    def row(n: int) -> List[Tuple[float, float]]:
        un = as_sendo(family.member(n))
        out = []
        for a in alphas:
            c = un.cut(a)
            inner = 0.0 if space.is_empty(strict[a]) else space.directed_hausdorff(strict[a], c)
            out.append((inner, space.directed_hausdorff(c, cuts[a])))
        return out

    results = map_indices(row, indices, workers)
    diag = SequenceDiagnostics(family.name, indices, family.tol)
    inner_verdicts: Dict[float, str] = {}
    outer_tail_inf: Dict[float, float] = {}
    for j, a in enumerate(alphas):
        inner = [r[j][0] for r in results]
        outer = [r[j][1] for r in results]
        diag.add_residuals(a, inner, outer)
        inner_verdicts[a] = trend(inner, diag.tol)
        outer_tail_inf[a] = float(min(outer[-max(1, len(outer) // 4) :]))
    diag.flags["inner"] = inner_verdicts
    diag.flags["outer_tail_inf"] = outer_tail_inf
    diag.notes.append("finite prefixes can falsify the Kuratowski inclusions but never verify them")
    return diag


def decomposition_trajectory(
    family: SequenceFamily,
    candidate: Any = None,
    n_max: int = 20,
    p: float = 1.0,
    workers: Optional[int] = None,
) -> SequenceDiagnostics:
    """``h_send``, ``h_end``, ``h_zero``, ``d_inf`` and ``d_p`` against the candidate.

    Records every index where ``h_end < 1`` but ``h_send > h_end + h_zero``,
    and whether the vanishing implications hold on the prefix:
    ``send``: h_send vanishing forces h_end and h_zero to vanish;
    ``dp``: d_p vanishing forces h_end to vanish.
    """
    u = family.require_limit(candidate)
    indices = _check_n(n_max)
    reports = map_indices(lambda n: metric_report(family.member(n), u, ps=(p,)), indices, workers)
    diag = SequenceDiagnostics(family.name, indices, family.tol)
    diag.add_metric("h_send", [r.h_send for r in reports])
    diag.add_metric("h_end", [r.h_end for r in reports])
    diag.add_metric("h_zero", [r.h_zero for r in reports])
    diag.add_metric("d_inf", [r.d_inf for r in reports])
    diag.add_metric("d_p", [r.d_p[float(p)] for r in reports])

    secf = [
        n
        for n, r in zip(indices, reports)
        if r.h_end < 1.0 and not ext_le(r.h_send, ext_add(r.h_end, r.h_zero), ABS_TOL)
    ]
    diag.flags["secf_violations"] = secf
    diag.flags["chain_violations"] = {n: r.violations for n, r in zip(indices, reports) if r.violations}
    send, end, zero, dp = (diag.vanishes(k) for k in ("h_send", "h_end", "h_zero", "d_p"))
    diag.flags["implications"] = {"send": (not send) or (end and zero), "dp": (not dp) or end}
    diag.flags["p"] = float(p)
    if secf:
        logger.error("%s: h_send exceeds h_end + h_zero at %s", family.name, secf)
    return diag


def equi_rc_modulus(
    family: SequenceFamily,
    n_max: int = 20,
    deltas: Optional[Sequence[float]] = None,
    eps: Optional[float] = None,
) -> SequenceDiagnostics:
    """``δ ↦ max_{n ≤ N} H([u_n]_δ, [u_n]_0)``.

    The default δ grid is the union of the members' thresholds, where the
    curve can change. With ``eps`` the prefix is equi-right-continuous at that
    resolution when the curve dips below ``eps``.
    """
    indices = _check_n(n_max)
    members = [as_sendo(family.member(n)) for n in indices]
    if deltas is None:
        grid = sorted({a for m in members for a in m.thresholds})
    else:
        grid = sorted({check_level(d) for d in deltas if d > 0})
    if not grid:
        raise UsageError("need at least one positive delta")
    space = members[0].space
    values = []
    for d in grid:
        worst = 0.0
        for m in members:
            worst = max(worst, _cut_distance(space, m.cut(d), m.zero_level()))
        values.append(worst)
    diag = SequenceDiagnostics(family.name, indices, family.tol)
    diag.set_modulus(grid, values)
    if eps is not None:
        diag.flags["eps"] = float(eps)
        diag.flags["equi_right_continuous"] = bool(np.any(np.asarray(values) < eps))
    logger.debug("modulus of %s over %d deltas", family.name, len(grid))
    return diag


class CauchyUnionReport:
    """Prefix unions ``D_n = C_1 ∪ ... ∪ C_n`` and ``H(D_n, D_N)``."""

    def __init__(self, unions: List[ClosedSet], stabilization: np.ndarray):
        self.unions = unions
        self.stabilization = stabilization

    @property
    def limit(self) -> ClosedSet:
        return self.unions[-1]

    @property
    def label(self) -> str:
        return f"diagnostic at N={len(self.unions)}"

    def stabilized_at(self, tol: float) -> Optional[int]:
        """First index from which ``H(D_n, D_N)`` stays below ``tol``."""
        below = self.stabilization < tol
        for i in range(len(below)):
            if below[i:].all():
                return i + 1
        return None


def cauchy_union_limit(space: GroundSpace, sets: Sequence[ClosedSet]) -> CauchyUnionReport:
    """Estimate the limit of a Cauchy sequence of closed sets by its prefix union."""
    if not sets:
        raise DomainError("no sets given")
    items = [space.make_set(s) for s in sets]
    if any(space.is_empty(s) for s in items):
        raise DomainError("every set of the sequence must be nonempty")
    unions = []
    acc = space.empty_set()
    for s in items:
        acc = space.union(acc, s)
        unions.append(acc)
    last = unions[-1]
    stab = np.array([_cut_distance(space, d, last) for d in unions])
    return CauchyUnionReport(unions, stab)
