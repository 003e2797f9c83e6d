"""ε-net certificates for level unions ``U(α) = ∪_{u ∈ U} [u]_α``.

Nets are built by greedy farthest-point insertion: start from one point and
repeatedly add the point of the set farthest from the current centers until
that distance is at most ε. On the real line the farthest point of an
interval union from a finite center set is either an endpoint of the union
or a midpoint between adjacent centers, so the candidates are enumerated
exactly. Every certificate is re-checked by :func:`verify_coverage`, which
sweeps merged balls and shares no code with the construction.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.extreal import ABS_TOL, format_ext
from fuzzy_metric.core.space import ClosedSet, GroundSpace, RealLine, directed_min_max
from fuzzy_metric.fuzzy.sendo import as_sendo
from fuzzy_metric.fuzzy.step import check_level
from fuzzy_metric.fuzzy.validation import ensure_valid
from fuzzy_metric.intervals.interval import IntervalUnion

logger = logging.getLogger(__name__)

MAX_CENTERS = 100_000


class NetCertificate:
    """Centers whose closed ε-balls cover ``U(α)``, or a certified failure."""

    def __init__(
        self,
        level: Optional[float],
        eps: float,
        centers: List[Any],
        coverage: float,
        description: str,
        reason: str = "",
    ):
        self.level = level
        self.eps = eps
        self.centers = centers
        self.coverage = coverage
        self.description = description
        self.reason = reason
        self.verified: Optional[bool] = None

    @property
    def success(self) -> bool:
        return self.coverage <= self.eps + ABS_TOL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "level": self.level,
            "eps": self.eps,
            "success": self.success,
            "verified": self.verified,
            "coverage": format_ext(self.coverage),
            "centers": [c if isinstance(c, (str, float)) else list(c) for c in self.centers],
            "set": self.description,
            "reason": self.reason,
        }

    def __repr__(self) -> str:
        status = "covers" if self.success else "fails"
        return f"NetCertificate(level={self.level}, eps={self.eps:g}, {len(self.centers)} centers, {status})"


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not eps > 0 or math.isinf(eps):
        raise UsageError(f"eps must be a positive number, got {eps}")
    return eps


def _distance_to_sorted(xs: np.ndarray, centers: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(centers, xs)
    left = centers[np.clip(idx - 1, 0, len(centers) - 1)]
    right = centers[np.clip(idx, 0, len(centers) - 1)]
    return np.minimum(np.abs(xs - left), np.abs(xs - right))


def _line_net(s: IntervalUnion, eps: float, level: Optional[float]) -> NetCertificate:
    closed = s.closure()
    if not closed.is_bounded():
        return NetCertificate(level, eps, [], math.inf, repr(s), reason="unbounded set")
    ends = np.asarray(closed.endpoints(), dtype=np.float64)
    centers = np.array([ends[0]])
    while True:
        mids = 0.5 * (centers[1:] + centers[:-1])
        candidates = np.concatenate((ends, mids[closed.contains_many(mids)]))
        gaps = _distance_to_sorted(candidates, centers)
        worst = int(np.argmax(gaps))
        if gaps[worst] <= eps or len(centers) >= MAX_CENTERS:
            break
        centers = np.sort(np.append(centers, candidates[worst]))
    coverage = float(gaps[worst])
    reason = "" if coverage <= eps else f"stopped at {MAX_CENTERS} centers"
    logger.debug("greedy net on %r: %d centers, coverage %g", s, len(centers), coverage)
    return NetCertificate(level, eps, [float(c) for c in centers], coverage, repr(s), reason)


def _point_net(space: GroundSpace, s: ClosedSet, eps: float, level: Optional[float]) -> NetCertificate:
    # one distance row per center; the full matrix is never built
    points = space.points(s)
    chosen = [0]
    nearest = space.pairwise([points[0]], points)[0]
    while nearest.max() > eps:
        nxt = int(np.argmax(nearest))
        chosen.append(nxt)
        nearest = np.minimum(nearest, space.pairwise([points[nxt]], points)[0])
    logger.debug("greedy net on %d points: %d centers", len(points), len(chosen))
    return NetCertificate(
        level, eps, [points[i] for i in chosen], float(nearest.max()), f"{len(points)} points"
    )


def greedy_eps_net(space: GroundSpace, s: ClosedSet, eps: float, level: Optional[float] = None) -> NetCertificate:
    """Farthest-point ε-net of ``s``; unbounded sets yield a certified failure."""
    eps = _check_eps(eps)
    if space.is_empty(s):
        raise UsageError("cannot build a net for an empty set")
    if isinstance(space, RealLine):
        cert = _line_net(s, eps, level)
    else:
        cert = _point_net(space, s, eps, level)
    if cert.success:
        cert.verified = verify_coverage(space, s, cert.centers, eps)
    return cert


def verify_coverage(space: GroundSpace, s: ClosedSet, centers: Sequence[Any], eps: float) -> bool:
    """Whether the closed ``eps``-balls around ``centers`` cover ``s``."""
    if space.is_empty(s):
        return True
    if not centers:
        return False
    if isinstance(space, RealLine):
        return _sweep_covers(s, [float(c) for c in centers], float(eps))
    return directed_min_max(space, space.points(s), list(centers)) <= eps + ABS_TOL


def _sweep_covers(s: IntervalUnion, centers: List[float], eps: float) -> bool:
    # merge the balls left to right, then check every component lies inside one run
    runs: List[List[float]] = []
    for c in sorted(centers):
        lo, hi = c - eps - ABS_TOL, c + eps + ABS_TOL
        if runs and lo <= runs[-1][1]:
            runs[-1][1] = max(runs[-1][1], hi)
        else:
            runs.append([lo, hi])
    for iv in s:
        if not any(lo <= iv.lo and iv.hi <= hi for lo, hi in runs):
            return False
    return True


def _common_space(collection: Sequence[Any]) -> GroundSpace:
    if not collection:
        raise UsageError("empty collection")
    space = collection[0].space
    for u in collection[1:]:
        if u.space != space:
            raise UsageError(f"collection mixes spaces: {space!r} and {u.space!r}")
    return space


def union_at_level(collection: Sequence[Any], alpha: float) -> ClosedSet:
    """``U(α)``; at ``α = 0`` ghost mass is included."""
    alpha = check_level(alpha)
    space = _common_space(collection)
    for u in collection:
        ensure_valid(u)
    return space.union_all(as_sendo(u).cut(alpha) for u in collection)


class TotalBoundednessReport:
    """Per-level certificates; a prefix verdict at resolution ``eps``.

    ``mode="end"`` checks the positive levels, ``mode="send"`` the 0-level.
    """

    def __init__(self, mode: str, eps: float, certificates: Dict[float, NetCertificate]):
        self.mode = mode
        self.eps = eps
        self.certificates = certificates
        self.label = f"prefix verdict at eps={eps:g}"

    @property
    def totally_bounded(self) -> bool:
        return all(c.success and c.verified for c in self.certificates.values())

    def failures(self) -> List[float]:
        return [a for a, c in sorted(self.certificates.items()) if not c.success]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "mode": self.mode,
            "eps": self.eps,
            "totally_bounded": self.totally_bounded,
            "certificates": [c.to_dict() for _, c in sorted(self.certificates.items())],
        }


def total_boundedness_report(
    collection: Sequence[Any],
    levels: Optional[Sequence[float]] = None,
    eps: float = 0.1,
    mode: str = "end",
) -> TotalBoundednessReport:
    if mode not in ("end", "send"):
        raise UsageError(f"mode must be 'end' or 'send', got {mode!r}")
    eps = _check_eps(eps)
    if mode == "send":
        grid = [0.0]
    else:
        grid = sorted({check_level(a) for a in (levels or [i / 10 for i in range(1, 11)]) if a > 0})
        if not grid:
            raise UsageError("end mode needs at least one positive level")
    space = _common_space(collection)
    certs = {a: greedy_eps_net(space, union_at_level(collection, a), eps, level=a) for a in grid}
    return TotalBoundednessReport(mode, eps, certs)


class RelativeCompactnessReport:
    """Total boundedness of the level unions plus closedness of each union in the space."""

    def __init__(self, total: TotalBoundednessReport, closed: Dict[float, bool]):
        self.total = total
        self.closed = closed
        self.label = total.label

    @property
    def relatively_compact(self) -> bool:
        # closures of totally bounded sets are compact in the complete spaces used here
        return self.total.totally_bounded

    @property
    def closed_in_space(self) -> bool:
        return all(self.closed.values())

    def to_dict(self) -> Dict[str, Any]:
        out = self.total.to_dict()
        out["relatively_compact"] = self.relatively_compact
        out["closed_in_space"] = self.closed_in_space
        return out


def relative_compactness_report(
    collection: Sequence[Any],
    levels: Optional[Sequence[float]] = None,
    eps: float = 0.1,
    mode: str = "end",
) -> RelativeCompactnessReport:
    total = total_boundedness_report(collection, levels, eps, mode)
    space = _common_space(collection)
    closed = {a: space.is_closed(union_at_level(collection, a)) for a in total.certificates}
    return RelativeCompactnessReport(total, closed)
