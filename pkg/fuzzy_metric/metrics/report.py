"""All metrics of a pair at once, with the inequality chain self-check."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from fuzzy_metric.core.config import worker_count
from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.extreal import ABS_TOL, ext_add, ext_le, format_ext
from fuzzy_metric.fuzzy.sendo import as_sendo
from fuzzy_metric.metrics.graph import directed_end, directed_send, end_metric, prepare_pair, send_metric
from fuzzy_metric.metrics.level import check_p, dp_metric, level_profile, sup_metric

logger = logging.getLogger(__name__)


class MetricReport:
    """Every metric between ``u`` and ``v`` and both directed halves of each.

    ``directed[name] = (H*(u, v), H*(v, u))`` for ``name`` in ``send``,
    ``end`` and ``zero``.
    """

    def __init__(
        self,
        d_inf: float,
        h_send: float,
        h_end: float,
        h_zero: float,
        d_p: Dict[float, float],
        directed: Dict[str, Tuple[float, float]],
        tol: float = ABS_TOL,
    ):
        self.d_inf = d_inf
        self.h_send = h_send
        self.h_end = h_end
        self.h_zero = h_zero
        self.d_p = d_p
        self.directed = directed
        self.violations = self._check(tol)

    def _check(self, tol: float) -> List[str]:
        bad = []
        if not ext_le(self.h_send, self.d_inf, tol):
            bad.append("smr: d_inf >= h_send")
        if not ext_le(self.h_end, self.h_send, tol):
            bad.append("smr: h_send >= h_end")
        if not ext_le(self.h_zero, self.h_send, tol):
            bad.append("umsf: h_zero <= h_send")
        if self.h_end < 1.0 and not ext_le(self.h_send, ext_add(self.h_end, self.h_zero), tol):
            bad.append("secf: h_send <= h_end + h_zero")
        for p, value in self.d_p.items():
            if not ext_le(value, self.d_inf, tol):
                bad.append(f"spr: d_inf >= d_{p:g}")
        if not ext_le(self.h_end, 1.0, tol):
            bad.append("h_end <= 1")
        return bad

    @property
    def ok(self) -> bool:
        return not self.violations

    def value(self, metric: str, p: float = 1.0) -> float:
        metric = metric.lower()
        if metric == "dp":
            return self.d_p[float(p)]
        try:
            return {"hsend": self.h_send, "hend": self.h_end, "dinf": self.d_inf, "hzero": self.h_zero}[metric]
        except KeyError:
            raise UsageError(f"unknown metric {metric!r}") from None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d_inf": format_ext(self.d_inf),
            "h_send": format_ext(self.h_send),
            "h_end": format_ext(self.h_end),
            "h_zero": format_ext(self.h_zero),
            "d_p": {f"{p:g}": format_ext(v) for p, v in sorted(self.d_p.items())},
            "directed": {
                name: [format_ext(a), format_ext(b)] for name, (a, b) in sorted(self.directed.items())
            },
            "violations": list(self.violations),
        }

    def __repr__(self) -> str:
        return (
            f"MetricReport(d_inf={self.d_inf:g}, h_send={self.h_send:g}, "
            f"h_end={self.h_end:g}, h_zero={self.h_zero:g})"
        )


def metric_report(u: Any, v: Any, ps: Sequence[float] = (1.0, 2.0), tol: float = ABS_TOL) -> MetricReport:
    su, sv = prepare_pair(u, v)
    space = su.space
    send = (directed_send(su, sv), directed_send(sv, su))
    end = (directed_end(su, sv), directed_end(sv, su))
    zu, zv = su.zero_level(), sv.zero_level()
    zero = (space.directed_hausdorff(zu, zv), space.directed_hausdorff(zv, zu))
    profile = level_profile(su, sv)
    d_p = {check_p(p): profile.lp(p) for p in ps}
    report = MetricReport(
        d_inf=profile.sup(),
        h_send=max(send),
        h_end=max(end),
        h_zero=max(zero),
        d_p=d_p,
        directed={"send": send, "end": end, "zero": zero},
        tol=tol,
    )
    if report.violations:
        logger.warning("inequality chain violated: %s", report.violations)
    return report


class AenBound:
    """Both sides of ``H*([u]_alpha, [v]_beta) <= H*(end u, end v)`` when the latter is below eps."""

    def __init__(self, lhs: float, rhs: float, eps: float, tol: float = ABS_TOL):
        self.lhs = lhs
        self.rhs = rhs
        self.eps = eps
        self.hypothesis = rhs < eps
        self.holds: Optional[bool] = ext_le(lhs, rhs, tol) if self.hypothesis else None

    @property
    def violated(self) -> bool:
        return self.holds is False

    def __repr__(self) -> str:
        return f"AenBound(lhs={self.lhs:g}, rhs={self.rhs:g}, hypothesis={self.hypothesis}, holds={self.holds})"


def aen_bound_check(u: Any, v: Any, alpha: float, beta: float, eps: float) -> AenBound:
    """Check that a small endograph distance controls cut distances across a level gap."""
    if eps <= 0 or alpha - beta < eps:
        raise UsageError(f"need alpha - beta >= eps > 0, got alpha={alpha}, beta={beta}, eps={eps}")
    su, sv = prepare_pair(u, v)
    rhs = directed_end(su, sv)
    lhs = su.space.directed_hausdorff(su.cut(alpha), sv.cut(beta))
    return AenBound(lhs, rhs, eps)


def metric_function(metric: str, p: float = 1.0) -> Callable[[Any, Any], float]:
    metric = metric.lower()
    table: Dict[str, Callable[[Any, Any], float]] = {
        "hsend": send_metric,
        "hend": end_metric,
        "dinf": sup_metric,
        "dp": lambda a, b: dp_metric(a, b, p),
    }
    if metric not in table:
        raise UsageError(f"unknown metric {metric!r}; choose from {sorted(table)}")
    return table[metric]


def pairwise_matrix(
    items: Sequence[Any],
    metric: str = "hsend",
    p: float = 1.0,
    workers: Optional[int] = None,
) -> np.ndarray:
    """Symmetric matrix of one metric over a collection.

    Pairs are independent; with more than one worker they are evaluated on a
    thread pool and written back by index.
    """
    fn = metric_function(metric, p)
    n = len(items)
    lifted = [as_sendo(x) for x in items]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = np.zeros((n, n))
    count = worker_count(workers)
    if count > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=count) as pool:
            values = list(pool.map(lambda ij: fn(lifted[ij[0]], lifted[ij[1]]), pairs))
    else:
        values = [fn(lifted[i], lifted[j]) for i, j in pairs]
    for (i, j), value in zip(pairs, values):
        out[i, j] = out[j, i] = value
    logger.debug("pairwise %s over %d items with %d workers", metric, n, count)
    return out
