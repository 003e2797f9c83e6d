"""Directed endograph and sendograph distances in closed form.

With ``g(x, t) = inf_{y in ⟨v⟩_0} [d(x, y) + (t - v(y))^+]`` the distance from
a point ``(x, t)`` of ``send u`` to ``send v`` is ``g(x, t)``, and to
``end v`` it is ``min(t, g(x, t))``. Both are nondecreasing in ``t``, so the
supremum over a graph is attained at ``t = u(x)``:

    H*(send u, send v) = sup_{x in ⟨u⟩_0} g(x, u(x))
    H*(end u, end v)   = sup_{x in ⟨u⟩_0} min(u(x), g(x, u(x)))

Ghost points carry height 0. On the real line the supremum is split per cut
``C_i`` at height ``a_i`` (points of ``C_{i+1}`` only raise ``g``) and each
piece is evaluated exactly by the envelope engine.
"""

from __future__ import annotations

import logging
from typing import Any, List, Tuple

import numpy as np

from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.space import ClosedSet, RealLine, directed_min_max
from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.sendo import SendoElement, as_sendo
from fuzzy_metric.fuzzy.validation import ensure_valid
from fuzzy_metric.intervals.envelope import PieceSet, weighted_distance_sup

logger = logging.getLogger(__name__)


def prepare_pair(u: Any, v: Any) -> Tuple[SendoElement, SendoElement]:
    """Lift both inputs to sendograph elements after the metric preconditions."""
    for w in (u, v):
        if isinstance(w, BandFuzzySet):
            raise UsageError("metrics are defined on upper semicontinuous inputs only")
    su, sv = as_sendo(u), as_sendo(v)
    if su.space != sv.space:
        raise UsageError(f"inputs live over different spaces: {su.space!r} vs {sv.space!r}")
    ensure_valid(su)
    ensure_valid(sv)
    return su, sv


def height_bands(v: SendoElement) -> List[Tuple[ClosedSet, float]]:
    """Partition of ``⟨v⟩_0`` into sets of constant membership."""
    space = v.space
    cuts, levels = v.cuts, v.thresholds
    out = []
    for i, c in enumerate(cuts):
        band = space.difference(c, cuts[i + 1]) if i + 1 < len(cuts) else c
        if not space.is_empty(band):
            out.append((band, levels[i]))
    rest = space.difference(v.zero_level(), cuts[0])
    if not space.is_empty(rest):
        out.append((rest, 0.0))
    return out


def _heights(v: SendoElement) -> Tuple[List[Any], np.ndarray]:
    points: List[Any] = []
    heights: List[float] = []
    for band, h in height_bands(v):
        for x in v.space.points(band):
            points.append(x)
            heights.append(h)
    return points, np.array(heights, dtype=np.float64)


def _directed(su: SendoElement, sv: SendoElement, capped: bool) -> float:
    space = su.space
    if isinstance(space, RealLine):
        pieces = PieceSet(height_bands(sv))
        targets = list(su.cuts)
        levels = list(su.thresholds)
        if capped:
            values = weighted_distance_sup(targets, pieces, levels, caps=levels)
        else:
            values = weighted_distance_sup(targets + [su.zero_level()], pieces, levels + [0.0])
        logger.debug("graph distance over %d cuts and %d pieces", len(targets), len(pieces))
        return float(values.max())
    xs, hx = _heights(su)
    ys, hy = _heights(sv)
    return directed_min_max(space, xs, ys, hx, hy, cap=capped)


def directed_send(u: Any, v: Any) -> float:
    """``H*(send u, send v)``."""
    su, sv = prepare_pair(u, v)
    return _directed(su, sv, capped=False)


def directed_end(u: Any, v: Any) -> float:
    """``H*(end u, end v)``; never exceeds 1."""
    su, sv = prepare_pair(u, v)
    return _directed(su, sv, capped=True)


def send_metric(u: Any, v: Any) -> float:
    return max(directed_send(u, v), directed_send(v, u))


def end_metric(u: Any, v: Any) -> float:
    return max(directed_end(u, v), directed_end(v, u))
