"""Constructions that approximate a fuzzy set within ε in a chosen metric.

Each construction computes its own distance bound on return and raises
:class:`~fuzzy_metric.core.errors.PostconditionError` if it fails.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from fuzzy_metric.core.errors import DomainError, PostconditionError, PreconditionError, UsageError
from fuzzy_metric.core.extreal import ABS_TOL
from fuzzy_metric.fuzzy.sendo import SendoElement, arrow_forward, as_sendo
from fuzzy_metric.fuzzy.step import StepFuzzySet
from fuzzy_metric.fuzzy.validation import ensure_valid, validate
from fuzzy_metric.metrics.graph import end_metric, send_metric
from fuzzy_metric.metrics.level import sup_metric
from fuzzy_metric.metrics.report import pairwise_matrix

logger = logging.getLogger(__name__)


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not 0.0 < eps < 1.0:
        raise UsageError(f"eps must lie in (0, 1), got {eps}")
    return eps


def _step(u: Any) -> StepFuzzySet:
    if isinstance(u, SendoElement):
        raise UsageError("expected a step fuzzy set, got a sendograph element")
    if not isinstance(u, StepFuzzySet):
        raise UsageError(f"expected a step fuzzy set, got {type(u).__name__}")
    ensure_valid(u)
    return u


def flatten_below(v: Any, eps: float) -> StepFuzzySet:
    """``u_ε``: cuts of ``v`` above ``ε`` and the 0-level of ``v`` on ``(0, ε]``.

    Ghost mass of ``v`` is absorbed into the low levels, so the result is a
    sendograph image with ``H_send(v, →u_ε) <= ε``.
    """
    eps = _check_eps(eps)
    sv = as_sendo(v)
    ensure_valid(sv)
    space = sv.space
    if not space.is_compact(sv.zero_level()):
        raise UsageError("flattening needs a compact 0-level")
    base = sv.base.with_threshold(eps)
    zero = sv.zero_level()
    cuts = [zero if a <= eps else c for a, c in zip(base.thresholds, base.cuts)]
    out = StepFuzzySet(space, base.thresholds, cuts).canonical()
    bound = send_metric(sv, arrow_forward(out))
    if bound > eps + ABS_TOL:
        raise PostconditionError(f"flatten: H_send = {bound} exceeds eps = {eps}")
    logger.debug("flattened below %g: H_send = %g", eps, bound)
    return out


def truncate_above(u: StepFuzzySet, eps: float) -> StepFuzzySet:
    """``u^ε``: cuts of ``u`` above ``ε`` and ``[u]_ε`` below; ``H_end(u, u^ε) <= ε``."""
    eps = _check_eps(eps)
    u = _step(u)
    space = u.space
    top = u.cut(eps)
    if not space.is_bounded(top):
        raise DomainError(
            f"[u]_{eps:g} is unbounded; truncation needs compact cuts at positive levels"
        )
    base = u.with_threshold(eps)
    cuts = [top if a <= eps else c for a, c in zip(base.thresholds, base.cuts)]
    out = StepFuzzySet(space, base.thresholds, cuts).canonical()
    bound = end_metric(u, out)
    if bound > eps + ABS_TOL:
        raise PostconditionError(f"truncate: H_end = {bound} exceeds eps = {eps}")
    logger.debug("truncated above %g: H_end = %g", eps, bound)
    return out


def project_to_grid(v: StepFuzzySet, grid: Iterable[Any], eps: float) -> StepFuzzySet:
    """Snap every cut onto ``C_α = {x ∈ C_0 : d(x, [v]_α) <= ε}``.

    Needs ``H(C_0, [v]_0) < ε``; the result lives on ``C_0``, keeps the
    threshold ladder of ``v`` and satisfies ``d_∞(v, w) <= ε``.
    """
    eps = float(eps)
    if not eps > 0:
        raise UsageError(f"eps must be positive, got {eps}")
    v = _step(v)
    space = v.space
    c0 = space.make_set(grid)
    if space.is_empty(c0):
        raise PreconditionError("the grid is empty")
    points = space.points(c0)
    gap = space.hausdorff(c0, v.cut(0.0))
    if not gap < eps:
        raise PreconditionError(f"H(C_0, [v]_0) = {gap:g} is not below eps = {eps:g}")
    cuts = []
    for c in v.cuts:
        dist = np.array([space.distance_to_set(x, c) for x in points])
        # ties d = eps belong to the cut
        cuts.append([x for x, d in zip(points, dist) if d <= eps + ABS_TOL])
    w = StepFuzzySet(space, v.thresholds, cuts)
    report = validate(w)
    if not report.ok:
        raise PostconditionError(f"projection is not a valid step set: {report.summary()}")
    bound = sup_metric(v, w)
    if bound > eps + ABS_TOL:
        raise PostconditionError(f"projection: d_inf = {bound} exceeds eps = {eps}")
    logger.debug("projected onto %d grid points: d_inf = %g", len(points), bound)
    return w


class ClosednessReport:
    """Pairwise distances of a finite collection and the distinct pairs at distance 0."""

    def __init__(self, metric: str, matrix: np.ndarray, collisions: List[Tuple[int, int]]):
        self.metric = metric
        self.matrix = matrix
        self.collisions = collisions

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metric": self.metric,
            "matrix": [[v if math.isfinite(v) else "+inf" for v in row] for row in self.matrix.tolist()],
            "collisions": [list(pair) for pair in self.collisions],
        }


def closedness_within(
    collection: Sequence[Any], metric: str = "hend", p: float = 1.0, tol: float = ABS_TOL
) -> ClosednessReport:
    """Distinct members the metric cannot tell apart."""
    items = [as_sendo(u) for u in collection]
    for u in items:
        ensure_valid(u)
    matrix = pairwise_matrix(items, metric, p)
    collisions = [
        (i, j)
        for i in range(len(items))
        for j in range(i + 1, len(items))
        if matrix[i, j] <= tol and items[i] != items[j]
    ]
    if collisions:
        logger.info("%s does not separate %d pairs", metric, len(collisions))
    return ClosednessReport(metric, matrix, collisions)
