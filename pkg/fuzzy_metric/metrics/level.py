"""Level-wise metrics: d_∞ and d_p read off a merged band ladder."""

from __future__ import annotations

import logging
import math
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.space import GroundSpace, RealLine
from fuzzy_metric.fuzzy.step import from_oracle, merged_ladder
from fuzzy_metric.metrics.graph import prepare_pair

logger = logging.getLogger(__name__)


class LevelProfile:
    """``alpha ↦ H([u]_alpha, [v]_alpha)`` as a step function.

    ``uppers[i]`` closes band ``(uppers[i-1], uppers[i]]`` on which the
    distance is ``values[i]``; ``zero`` is the distance between the 0-levels.
    """

    def __init__(self, uppers: List[float], values: List[float], zero: float):
        self.uppers = np.asarray(uppers, dtype=np.float64)
        self.values = np.asarray(values, dtype=np.float64)
        self.zero = float(zero)

    @property
    def widths(self) -> np.ndarray:
        return np.diff(np.concatenate(([0.0], self.uppers)))

    def at(self, alpha: float) -> float:
        if alpha == 0.0:
            return self.zero
        i = int(np.searchsorted(self.uppers, alpha, side="left"))
        return float(self.values[min(i, len(self.values) - 1)])

    def sup(self) -> float:
        return max(self.zero, float(self.values.max()))

    def lp(self, p: float) -> float:
        p = check_p(p)
        widths = self.widths
        positive = widths > 0
        if np.isinf(self.values[positive]).any():
            return math.inf
        total = float(np.sum(self.values[positive] ** p * widths[positive]))
        return total ** (1.0 / p)

    def rows(self) -> List[Dict[str, float]]:
        lowers = np.concatenate(([0.0], self.uppers[:-1]))
        return [
            {"lower": float(lo), "upper": float(hi), "distance": float(val)}
            for lo, hi, val in zip(lowers, self.uppers, self.values)
        ]


def check_p(p: float) -> float:
    p = float(p)
    if not p >= 1.0 or math.isinf(p):
        raise UsageError(f"p must be a finite number >= 1, got {p}")
    return p


def level_profile(u: Any, v: Any, extra_levels: Optional[Iterable[float]] = None) -> LevelProfile:
    su, sv = prepare_pair(u, v)
    space = su.space
    ladder = merged_ladder(su.base, sv.base, extra=extra_levels)
    cache: Dict[Tuple[int, int], float] = {}
    values = []
    for a in ladder:
        cu, cv = su.cut(a), sv.cut(a)
        key = (id(cu), id(cv))
        if key not in cache:
            cache[key] = 0.0 if cu == cv else space.hausdorff(cu, cv)
        values.append(cache[key])
    zero_u, zero_v = su.zero_level(), sv.zero_level()
    zero = 0.0 if zero_u == zero_v else space.hausdorff(zero_u, zero_v)
    logger.debug("level profile: %d bands, %d distinct cut pairs", len(ladder), len(cache))
    return LevelProfile(ladder, values, zero)


def sup_metric(u: Any, v: Any) -> float:
    """``d_∞(u, v) = sup_alpha H([u]_alpha, [v]_alpha)``."""
    return level_profile(u, v).sup()


def dp_metric(u: Any, v: Any, p: float = 1.0) -> float:
    """``d_p``; the level distance is a step function so ``d_p* = d_p``."""
    return level_profile(u, v).lp(p)


class OracleEstimate:
    """``d_p`` of an ``m``-level discretization and its change under refinement to ``2m``."""

    __slots__ = ("value", "refined", "error", "levels")

    def __init__(self, value: float, refined: float, levels: int):
        self.value = value
        self.refined = refined
        self.levels = levels
        if math.isinf(value) or math.isinf(refined):
            self.error = 0.0 if value == refined else math.inf
        else:
            self.error = abs(value - refined)

    def __repr__(self) -> str:
        return f"OracleEstimate(value={self.value:g}, error={self.error:g}, levels={self.levels})"


def dp_via_oracle(
    oracle_u: Callable[[float], Any],
    oracle_v: Callable[[float], Any],
    p: float = 1.0,
    m: int = 1000,
    space: Optional[GroundSpace] = None,
) -> OracleEstimate:
    """``d_p`` between two cut oracles by right-endpoint sampling on ``m`` and ``2m`` levels."""
    p = check_p(p)
    if int(m) < 2:
        raise UsageError(f"need at least 2 levels, got {m}")
    space = space or RealLine()

    def at(levels: int) -> float:
        grid = np.arange(1, levels + 1) / levels
        return dp_metric(from_oracle(space, oracle_u, grid), from_oracle(space, oracle_v, grid), p)

    coarse = at(int(m))
    fine = at(2 * int(m))
    logger.debug("d_%g via oracle: m=%d -> %g, 2m -> %g", p, m, coarse, fine)
    return OracleEstimate(coarse, fine, int(m))
