"""Brute-force graph distances on a product grid.

This is the independent reference the closed forms are checked against: it
samples points of one graph and takes plain minima over samples of the
other, sharing nothing with the envelope engine.
"""

from __future__ import annotations

from typing import Any, List, Tuple

import numpy as np

from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.core.space import RealLine
from fuzzy_metric.fuzzy.sendo import SendoElement
from fuzzy_metric.metrics.graph import prepare_pair

_CHUNK = 1024


def _window(su: SendoElement, sv: SendoElement) -> Tuple[float, float]:
    zu, zv = su.zero_level(), sv.zero_level()
    if not (zu.is_bounded() and zv.is_bounded()):
        raise DomainError("the grid oracle needs bounded 0-levels")
    pts = zu.endpoints() + zv.endpoints()
    return min(pts), max(pts)


def _line_samples(s: SendoElement, grid: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    extra = [p for c in s.cuts for p in c.endpoints()] + s.zero_level().endpoints()
    xs = np.unique(np.concatenate((grid, np.asarray(extra, dtype=np.float64))))
    keep = s.zero_level().contains_many(xs)
    xs = xs[keep]
    heights = np.zeros(len(xs))
    for a, c in zip(s.thresholds, s.cuts):
        heights[c.contains_many(xs)] = a
    return xs, heights


def _point_samples(s: SendoElement, pitch: float) -> Tuple[List[Any], np.ndarray]:
    points: List[Any] = []
    heights: List[float] = []
    for x in s.space.points(s.zero_level()):
        top = s.membership(x)
        for t in np.unique(np.append(np.arange(0.0, top, pitch), top)):
            points.append(x)
            heights.append(float(t))
    return points, np.array(heights)


def _directed_line(su: SendoElement, sv: SendoElement, pitch: float, end: bool) -> float:
    lo, hi = _window(su, sv)
    grid = np.arange(lo, hi + pitch, pitch)
    xs, hx = _line_samples(su, grid)
    ys, hy = _line_samples(sv, grid)
    best = 0.0
    for start in range(0, len(xs), _CHUNK):
        x, t = xs[start : start + _CHUNK], hx[start : start + _CHUNK]
        g = (np.abs(x[:, None] - ys[None, :]) + np.maximum(0.0, t[:, None] - hy[None, :])).min(axis=1)
        if end:
            g = np.minimum(g, t)
        best = max(best, float(g.max()))
    return best


def _directed_points(su: SendoElement, sv: SendoElement, pitch: float, end: bool) -> float:
    space = su.space
    xs, tx = _point_samples(su, pitch)
    ys, sy = _point_samples(sv, pitch)
    d = space.pairwise(xs, ys) + np.abs(tx[:, None] - sy[None, :])
    g = d.min(axis=1)
    if end:
        # the zero slab X × {0} belongs to every endograph
        g = np.minimum(g, tx)
    return float(g.max())


def graph_grid_directed(u: Any, v: Any, pitch: float = 1e-3, kind: str = "send") -> float:
    if kind not in ("send", "end"):
        raise UsageError(f"kind must be 'send' or 'end', got {kind!r}")
    if pitch <= 0:
        raise UsageError("pitch must be positive")
    su, sv = prepare_pair(u, v)
    end = kind == "end"
    if isinstance(su.space, RealLine):
        return _directed_line(su, sv, pitch, end)
    return _directed_points(su, sv, pitch, end)


def graph_grid_oracle(u: Any, v: Any, pitch: float = 1e-3, kind: str = "send") -> float:
    """Grid estimate of ``H_send`` or ``H_end``; within ``2 * pitch`` of the exact value."""
    return max(graph_grid_directed(u, v, pitch, kind), graph_grid_directed(v, u, pitch, kind))


def height_profile(u: Any, v: Any, x: float, pitch: float = 1e-2) -> np.ndarray:
    """Grid distances from ``(x, t)`` to ``send v`` for ``t`` stepping up to ``u(x)``.

    The closed forms rely on this sequence being nondecreasing.
    """
    su, sv = prepare_pair(u, v)
    if not isinstance(su.space, RealLine):
        raise UsageError("height profiles are sampled on the real line")
    lo, hi = _window(su, sv)
    ys, hy = _line_samples(sv, np.arange(lo, hi + pitch, pitch))
    top = su.membership(x)
    ts = np.append(np.arange(0.0, top, pitch), top)
    # inf over s in [0, v(y)] of |t - s| is (t - v(y))^+
    return (np.abs(x - ys)[None, :] + np.maximum(0.0, ts[:, None] - hy[None, :])).min(axis=1)
