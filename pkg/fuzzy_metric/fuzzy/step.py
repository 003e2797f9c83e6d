"""Step fuzzy sets: a finite threshold ladder with nested cut sets."""

from __future__ import annotations

import bisect
import logging
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.core.space import ClosedSet, GroundSpace

logger = logging.getLogger(__name__)


def check_level(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise UsageError(f"level must lie in [0, 1], got {alpha}")
    return alpha


class StepFuzzySet:
    """Fuzzy set with thresholds ``0 < a_1 < ... < a_k = 1`` and cuts ``C_1 ⊇ ... ⊇ C_k``.

    The alpha-cut is ``C_i`` for ``alpha`` in ``(a_{i-1}, a_i]`` and the 0-cut
    is ``closure(C_1)``; it is derived, never stored. Construction only checks
    shape; :func:`~fuzzy_metric.fuzzy.validation.validate` reports everything
    else.
    """

    __slots__ = ("_space", "_thresholds", "_cuts", "_report")

    def __init__(self, space: GroundSpace, thresholds: Sequence[float], cuts: Sequence[Iterable[Any]]):
        if len(thresholds) != len(cuts):
            raise ValueError(f"{len(thresholds)} thresholds but {len(cuts)} cuts")
        if not thresholds:
            raise ValueError("A step fuzzy set needs at least one threshold")
        self._space = space
        self._thresholds: Tuple[float, ...] = tuple(float(a) for a in thresholds)
        self._cuts: Tuple[ClosedSet, ...] = tuple(space.make_set(c) for c in cuts)
        self._report = None

    @classmethod
    def singleton(cls, space: GroundSpace, x: Any) -> StepFuzzySet:
        """The crisp point ``x̂``."""
        return cls(space, [1.0], [[x]])

    @classmethod
    def characteristic(cls, space: GroundSpace, s: Iterable[Any]) -> StepFuzzySet:
        """``χ_S``; ``s`` is a closed set of the space or an iterable of points."""
        return cls(space, [1.0], [s])

    @classmethod
    def from_cuts(cls, space: GroundSpace, thresholds: Sequence[float], cuts: Sequence[Iterable[Any]]) -> StepFuzzySet:
        return cls(space, thresholds, cuts)

    @classmethod
    def from_membership(cls, space: GroundSpace, grades: Dict[Any, float]) -> StepFuzzySet:
        """Build from a finite table of membership grades; zero grades are dropped."""
        levels = sorted({float(g) for g in grades.values() if g > 0})
        if not levels:
            raise ValueError("membership table has no positive grade")
        cuts = [[x for x, g in grades.items() if g >= a] for a in levels]
        return cls(space, levels, cuts)

    @property
    def space(self) -> GroundSpace:
        return self._space

    @property
    def thresholds(self) -> Tuple[float, ...]:
        return self._thresholds

    @property
    def cuts(self) -> Tuple[ClosedSet, ...]:
        return self._cuts

    def __len__(self) -> int:
        return len(self._thresholds)

    def cut(self, alpha: float) -> ClosedSet:
        alpha = check_level(alpha)
        if alpha == 0.0:
            return self.support()
        i = bisect.bisect_left(self._thresholds, alpha)
        if i == len(self._thresholds):
            return self._space.empty_set()
        return self._cuts[i]

    def strict_cut(self, alpha: float) -> ClosedSet:
        """``{u > alpha}``."""
        alpha = check_level(alpha)
        i = bisect.bisect_right(self._thresholds, alpha)
        if i == len(self._thresholds):
            return self._space.empty_set()
        return self._cuts[i]

    def support(self) -> ClosedSet:
        return self._space.closure(self._cuts[0])

    def membership(self, x: Any) -> float:
        for a, c in zip(reversed(self._thresholds), reversed(self._cuts)):
            if self._space.contains(c, x):
                return a
        return 0.0

    def bands(self) -> List[Tuple[float, float, ClosedSet]]:
        """``(lower, upper, cut)`` for each band ``(lower, upper]``."""
        lowers = (0.0,) + self._thresholds[:-1]
        return list(zip(lowers, self._thresholds, self._cuts))

    def levels_class(self) -> str:
        """``"USCB"`` when every cut is compact, ``"USC"`` otherwise."""
        if self._space.is_compact(self.support()):
            return "USCB"
        return "USC"

    def with_threshold(self, alpha: float) -> StepFuzzySet:
        """Same fuzzy set with ``alpha`` added to the ladder."""
        alpha = check_level(alpha)
        if alpha == 0.0 or alpha in self._thresholds:
            return self
        i = bisect.bisect_left(self._thresholds, alpha)
        if i == len(self._thresholds):
            raise UsageError(f"level {alpha} lies above the top threshold")
        thresholds = self._thresholds[:i] + (alpha,) + self._thresholds[i:]
        cuts = self._cuts[:i] + (self._cuts[i],) + self._cuts[i:]
        return StepFuzzySet(self._space, thresholds, cuts)

    def canonical(self) -> StepFuzzySet:
        """Drop thresholds whose band repeats the next band's cut."""
        keep = [
            i
            for i in range(len(self._thresholds))
            if i == len(self._thresholds) - 1 or self._cuts[i] != self._cuts[i + 1]
        ]
        if len(keep) == len(self._thresholds):
            return self
        return StepFuzzySet(
            self._space, [self._thresholds[i] for i in keep], [self._cuts[i] for i in keep]
        )

    def key(self) -> Tuple[Tuple[float, ...], Tuple[ClosedSet, ...]]:
        c = self.canonical()
        return (c._thresholds, c._cuts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StepFuzzySet):
            return False
        return self._space == other._space and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        ladder = ", ".join(f"{a:g}" for a in self._thresholds)
        return f"StepFuzzySet({self._space!r}, thresholds=[{ladder}])"


def from_oracle(
    space: GroundSpace,
    oracle: Callable[[float], Iterable[Any]],
    levels: Iterable[float],
    preserve_support: bool = False,
) -> StepFuzzySet:
    """Discretize a cut oracle by right-endpoint sampling.

    Band ``(a_{i-1}, a_i]`` receives ``oracle(a_i)``. With ``preserve_support``
    the first band receives ``oracle(0)`` instead, so the 0-cut of the result
    is the oracle's 0-cut.
    """
    ladder = sorted({float(a) for a in levels if 0.0 < float(a) <= 1.0} | {1.0})
    cuts = [space.make_set(oracle(a)) for a in ladder]
    if space.is_empty(cuts[-1]):
        raise DomainError("oracle returned an empty cut at level 1")
    if preserve_support:
        cuts[0] = space.make_set(oracle(0.0))
    logger.debug("discretized oracle on %d levels", len(ladder))
    return StepFuzzySet(space, ladder, cuts)


def merged_ladder(*sets: StepFuzzySet, extra: Optional[Iterable[float]] = None) -> List[float]:
    """Union of threshold ladders, sorted."""
    levels = {a for u in sets for a in u.thresholds}
    if extra is not None:
        levels.update(float(a) for a in extra if 0.0 < float(a) <= 1.0)
    return sorted(levels)
