"""Exact sup-inf distances between interval unions on the real line.

Every real-line quantity in the package reduces to one shape of problem:

    sup_{x in T} min(cap, min_j [dist(x, P_j) + w_j])

where the ``P_j`` are closed intervals with disjoint interiors and the
``w_j >= 0`` are per-interval penalties. Between two consecutive breakpoints
the inner minimum is concave in ``x`` (a minimum of lines of slope +1 and -1
plus a constant), so each elementary cell is maximized in closed form at the
apex of that tent, clipped to the cell. Unbounded cells are handled by the
same formula: the tent's apex lies at infinity exactly when one slope family
is absent, which is what produces the exact +inf values.
"""

from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from fuzzy_metric.core.errors import DomainError
from fuzzy_metric.intervals.interval import IntervalUnion, elementary_cells

logger = logging.getLogger(__name__)


class PieceSet:
    """Closed intervals with disjoint interiors, each carrying a height.

    Built from a list of ``(IntervalUnion, height)`` bands whose sets are
    pairwise disjoint; each band is replaced by the closures of its
    components.
    """

    __slots__ = ("_lo", "_hi", "_heights")

    def __init__(self, bands: Sequence[Tuple[IntervalUnion, float]]):
        rows: List[Tuple[float, float, float]] = []
        for band, height in bands:
            for iv in band:
                rows.append((iv.lo, iv.hi, float(height)))
        if not rows:
            raise DomainError("distance to an empty set is undefined")
        rows.sort(key=lambda r: (r[0], r[1]))
        arr = np.array(rows, dtype=np.float64)
        self._lo = arr[:, 0]
        self._hi = arr[:, 1]
        self._heights = arr[:, 2]

    @classmethod
    def flat(cls, union: IntervalUnion) -> PieceSet:
        return cls([(union, 0.0)])

    @property
    def lo(self) -> np.ndarray:
        return self._lo

    @property
    def hi(self) -> np.ndarray:
        return self._hi

    @property
    def heights(self) -> np.ndarray:
        return self._heights

    def __len__(self) -> int:
        return len(self._lo)

    def breakpoints(self) -> List[float]:
        pts = np.concatenate((self._lo, self._hi))
        return [float(p) for p in pts[np.isfinite(pts)]]


def weighted_distance_sup(
    targets: Sequence[IntervalUnion],
    pieces: PieceSet,
    levels: Sequence[float],
    caps: Optional[Sequence[float]] = None,
) -> np.ndarray:
    """Evaluate ``sup_{x in T_i} min(cap_i, min_j [dist(x, P_j) + (t_i - h_j)^+])``.

    Args:
        targets: One set ``T_i`` per query; an empty target yields ``0``.
        pieces: The intervals ``P_j`` with their heights ``h_j``.
        levels: Query heights ``t_i``.
        caps: Optional per-query caps (``+inf`` when omitted).

    Returns:
        Array of sup values, one per target.
    """
    n_targets = len(targets)
    if n_targets == 0:
        return np.zeros(0)
    t = np.asarray(levels, dtype=np.float64).reshape(-1)
    cap = np.full(n_targets, math.inf) if caps is None else np.asarray(caps, dtype=np.float64)

    breaks = pieces.breakpoints()
    for target in targets:
        breaks.extend(target.endpoints())
    c0, c1 = elementary_cells(breaks)

    member = np.vstack([target.covers_cells(c0, c1) for target in targets])

    lo, hi = pieces.lo, pieces.hi
    k = len(lo)
    weights = np.maximum(0.0, t[:, None] - pieces.heights[None, :])

    # prefix[n] = min_{j<n} (w_j - hi_j); suffix[n] = min_{j>=n} (lo_j + w_j)
    with np.errstate(invalid="ignore"):
        prefix = np.concatenate(
            (np.full((n_targets, 1), math.inf), np.minimum.accumulate(weights - hi[None, :], axis=1)),
            axis=1,
        )
        suffix = np.concatenate(
            (
                np.minimum.accumulate((lo[None, :] + weights)[:, ::-1], axis=1)[:, ::-1],
                np.full((n_targets, 1), math.inf),
            ),
            axis=1,
        )

    n_left = np.searchsorted(hi, c0, side="right")
    n_right = np.searchsorted(lo, c1, side="left")
    inside = n_left < n_right
    inside_idx = np.where(inside, np.minimum(n_left, k - 1), 0)

    p = prefix[:, n_left]
    s = suffix[:, n_right]
    w_in = np.where(inside[None, :], weights[:, inside_idx], math.inf)

    p_inf = np.isinf(p)
    s_inf = np.isinf(s)
    with np.errstate(invalid="ignore", over="ignore"):
        apex = np.clip((s - p) / 2.0, c0[None, :], c1[None, :])
        x_star = np.where(
            ~p_inf & ~s_inf,
            apex,
            np.where(p_inf & ~s_inf, c0[None, :], np.where(~p_inf & s_inf, c1[None, :], 0.0)),
        )
        rising = np.where(p_inf, math.inf, x_star + p)
        falling = np.where(s_inf, math.inf, s - x_star)
    value = np.minimum(np.minimum(rising, falling), w_in)
    value = np.minimum(value, cap[:, None])

    best = np.where(member, value, -math.inf).max(axis=1)
    logger.debug(
        "envelope: %d targets, %d pieces, %d cells", n_targets, k, len(c0)
    )
    return np.where(member.any(axis=1), best, 0.0)


def distance_to_union_many(xs: np.ndarray, union: IntervalUnion) -> np.ndarray:
    """``inf_{y in U} |x - y|`` for every finite ``x`` in ``xs``."""
    if union.is_empty():
        raise DomainError("distance to an empty set is undefined")
    xs = np.asarray(xs, dtype=np.float64)
    los, his, _, _ = union.arrays()
    idx = np.searchsorted(los, xs, side="right") - 1
    left = np.clip(idx, 0, len(los) - 1)
    right = np.clip(idx + 1, 0, len(los) - 1)
    # interval at or left of x, and the next one to the right
    d_left = np.where(idx >= 0, np.maximum(0.0, xs - his[left]), math.inf)
    d_right = np.where(idx + 1 < len(los), np.maximum(0.0, los[right] - xs), math.inf)
    return np.minimum(d_left, d_right)


def point_to_union_distance(x: float, union: IntervalUnion) -> float:
    """Distance from an extended real to an interval union.

    ``x = -inf`` (or ``+inf``) is read as a limit direction: the distance is
    ``0`` if the union is unbounded on that side and ``+inf`` otherwise.
    """
    if union.is_empty():
        raise DomainError("distance to an empty set is undefined")
    x = float(x)
    if math.isnan(x):
        raise DomainError("distance from NaN is undefined")
    if x == -math.inf:
        return 0.0 if not union.bounded_below() else math.inf
    if x == math.inf:
        return 0.0 if not union.bounded_above() else math.inf
    return float(distance_to_union_many(np.array([x]), union)[0])


def union_directed_hausdorff(a: IntervalUnion, b: IntervalUnion) -> float:
    """Exact ``H*(A, B) = sup_{x in A} d(x, B)``."""
    if a.is_empty() or b.is_empty():
        raise DomainError("Hausdorff distance is undefined for empty sets")
    return float(weighted_distance_sup([a], PieceSet.flat(b), [0.0])[0])


def union_hausdorff(a: IntervalUnion, b: IntervalUnion) -> float:
    if a.is_empty() or b.is_empty():
        raise DomainError("Hausdorff distance is undefined for empty sets")
    single = _single_interval_hausdorff(a, b)
    if single is not None:
        return single
    return max(union_directed_hausdorff(a, b), union_directed_hausdorff(b, a))


def _single_interval_hausdorff(a: IntervalUnion, b: IntervalUnion) -> Optional[float]:
    # H between two intervals is the larger endpoint gap
    if len(a) != 1 or len(b) != 1:
        return None
    ia, ib = a.intervals[0], b.intervals[0]
    return max(_gap(ia.lo, ib.lo), _gap(ia.hi, ib.hi))


def _gap(x: float, y: float) -> float:
    if math.isinf(x) or math.isinf(y):
        return 0.0 if x == y else math.inf
    return abs(x - y)


def brute_force_directed_hausdorff(
    a: IntervalUnion,
    b: IntervalUnion,
    pitch: float = 1e-3,
    window: Optional[Tuple[float, float]] = None,
) -> float:
    """Grid approximation of ``H*(A, B)``; agrees with the exact value within ``pitch``.

    Unbounded sets are clipped to ``window`` (default: the hull of all finite
    endpoints, padded by one).
    """
    if a.is_empty() or b.is_empty():
        raise DomainError("Hausdorff distance is undefined for empty sets")
    if window is None:
        pts = a.endpoints() + b.endpoints() or [0.0]
        window = (min(pts) - 1.0, max(pts) + 1.0)
    lo, hi = window
    grid = np.arange(lo, hi + pitch, pitch)
    samples = np.concatenate((grid, [p for p in a.endpoints() if lo <= p <= hi]))
    samples = samples[a.closure().contains_many(samples)]
    if samples.size == 0:
        return 0.0
    return float(distance_to_union_many(samples, b).max())
