"""Level-set classifiers D(u), P(u), P_0(u), F(u).

For a level alpha write ``S = closure({u > alpha})`` and ``C = [u]_alpha``:

* alpha ∈ D(u)  when ``C ⊄ S``
* alpha ∈ P(u)  when ``S ⊊ C``
* alpha ∈ F(u)  when ``S ≠ C``
* alpha ∈ P_0(u) when ``H([u]_beta, [u]_alpha)`` does not vanish as beta → alpha

Cuts of the representations here are constant between consecutive values,
so the predicates only need to be evaluated at those values and once per
open gap between them.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Union

from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.sendo import SendoElement
from fuzzy_metric.fuzzy.step import StepFuzzySet
from fuzzy_metric.intervals.interval import Interval, IntervalUnion

logger = logging.getLogger(__name__)


class LevelSetReport:
    """The four level classes as unions of levels inside (0, 1)."""

    def __init__(self, d: IntervalUnion, p: IntervalUnion, p0: IntervalUnion, f: IntervalUnion):
        self.D = d
        self.P = p
        self.P0 = p0
        self.F = f

    def as_dict(self) -> Dict[str, IntervalUnion]:
        return {"D": self.D, "P": self.P, "P0": self.P0, "F": self.F}

    def chain_holds(self) -> bool:
        """``P ⊆ D ⊆ F``."""
        return self.P.is_subset(self.D) and self.D.is_subset(self.F)

    def __repr__(self) -> str:
        return f"LevelSetReport(D={self.D!r}, P={self.P!r}, P0={self.P0!r}, F={self.F!r})"


class LevelJump:
    """Left and right jumps of ``alpha ↦ [u]_alpha`` at a threshold, in Hausdorff distance."""

    __slots__ = ("level", "left", "right")

    def __init__(self, level: float, left: float, right: float):
        self.level = level
        self.left = left
        self.right = right

    def __repr__(self) -> str:
        return f"LevelJump({self.level:g}, left={self.left:g}, right={self.right:g})"


def level_continuity(u: Union[StepFuzzySet, SendoElement]) -> List[LevelJump]:
    """Jumps at every threshold below 1.

    Cuts are constant on each band ``(a_{i-1}, a_i]`` so the left jump is
    always 0; the right jump is ``H(C_i, C_{i+1})``.
    """
    base = u.base if isinstance(u, SendoElement) else u
    space = base.space
    jumps = []
    for i in range(len(base.thresholds) - 1):
        a, c, nxt = base.thresholds[i], base.cuts[i], base.cuts[i + 1]
        right = 0.0 if c == nxt else space.hausdorff(c, nxt)
        jumps.append(LevelJump(a, 0.0, right))
    return jumps


def _critical_levels(u: Union[StepFuzzySet, BandFuzzySet]) -> List[float]:
    if isinstance(u, BandFuzzySet):
        values = u.values()
    else:
        values = list(u.thresholds)
    return sorted(v for v in set(values) if 0.0 < v < 1.0)


def classify_levels(u: Union[StepFuzzySet, BandFuzzySet, SendoElement]) -> LevelSetReport:
    if isinstance(u, SendoElement):
        u = u.base
    space = u.space
    critical = _critical_levels(u)
    bounds = [0.0] + critical + [1.0]

    d_parts: List[Interval] = []
    p_parts: List[Interval] = []
    f_parts: List[Interval] = []

    def classify(alpha: float) -> Dict[str, bool]:
        c = u.cut(alpha)
        s = space.closure(u.strict_cut(alpha))
        return {
            "D": not space.is_subset(c, s),
            "P": space.is_subset(s, c) and s != c,
            "F": s != c,
        }

    pieces: List[Any] = [Interval.point(a) for a in critical]
    pieces += [Interval(lo, hi, True, True) for lo, hi in zip(bounds, bounds[1:])]
    for piece in pieces:
        alpha = piece.lo if piece.is_degenerate else 0.5 * (piece.lo + piece.hi)
        flags = classify(alpha)
        if flags["D"]:
            d_parts.append(piece)
        if flags["P"]:
            p_parts.append(piece)
        if flags["F"]:
            f_parts.append(piece)

    if isinstance(u, StepFuzzySet):
        p0 = [Interval.point(j.level) for j in level_continuity(u) if j.right > 0]
    else:
        p0 = [
            Interval.point(a)
            for a in critical
            if space.closure(u.cut(a)) != space.closure(u.strict_cut(a))
        ]
    logger.debug("classified %d critical levels", len(critical))
    return LevelSetReport(
        IntervalUnion(d_parts), IntervalUnion(p_parts), IntervalUnion(p0), IntervalUnion(f_parts)
    )
