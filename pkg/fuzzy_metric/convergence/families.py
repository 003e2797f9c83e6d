"""Sequence families ``n ↦ u_n`` with a candidate limit.

Every family is generated per index from closed-form cut descriptions, so
nothing is stored between runs. Families whose cuts vary continuously with
the level are discretized through :func:`~fuzzy_metric.fuzzy.step.from_oracle`
on a uniform ladder that also contains every breakpoint of the member.
"""

from __future__ import annotations

import inspect
import logging
import math
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from fuzzy_metric.core.config import DEFAULT_LEVELS, VANISH_TOL
from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.space import FiniteSpace, GroundSpace, RealLine
from fuzzy_metric.fuzzy.sendo import SendoElement
from fuzzy_metric.fuzzy.step import StepFuzzySet, from_oracle
from fuzzy_metric.fuzzy.validation import ensure_valid
from fuzzy_metric.intervals.interval import Interval, IntervalUnion

logger = logging.getLogger(__name__)

CutOracle = Callable[[float], IntervalUnion]


class SequenceFamily:
    """A sequence ``u_1, u_2, ...`` and an optional candidate limit.

    ``oracle(n)`` returns the exact cut function of member ``n`` for
    continuous-level families (``None`` otherwise); ``pitch`` is the level
    spacing of their discretization and sets the vanishing tolerance.
    """

    def __init__(
        self,
        name: str,
        space: GroundSpace,
        build: Callable[[int], Any],
        limit: Any = None,
        description: str = "",
        pitch: float = 0.0,
        oracle: Optional[Callable[[int], CutOracle]] = None,
        limit_oracle: Optional[CutOracle] = None,
        size: Optional[int] = None,
    ):
        self.name = name
        self.space = space
        self.description = description
        self.pitch = pitch
        self.size = size
        self._build = build
        self._oracle = oracle
        self.limit_oracle = limit_oracle
        self._members: Dict[int, Any] = {}
        if limit is not None:
            ensure_valid(limit)
        self.limit = limit

    @classmethod
    def from_members(cls, name: str, members: Sequence[Any], limit: Any = None) -> SequenceFamily:
        """A user-supplied finite list; index ``n`` is ``members[n - 1]``."""
        if not members:
            raise UsageError(f"family {name!r} has no members")
        items = list(members)
        return cls(
            name,
            items[0].space,
            lambda n: items[n - 1],
            limit=limit,
            description=f"{len(items)} supplied members",
            size=len(items),
        )

    @property
    def exact(self) -> bool:
        return self.pitch == 0.0

    @property
    def tol(self) -> float:
        """Vanishing tolerance: ``VANISH_TOL`` when exact, ten pitches otherwise."""
        return VANISH_TOL if self.exact else 10.0 * self.pitch

    def member(self, n: int) -> Any:
        n = int(n)
        if n < 1:
            raise UsageError(f"family indices start at 1, got {n}")
        if self.size is not None and n > self.size:
            raise UsageError(f"family {self.name!r} has only {self.size} members")
        if n not in self._members:
            u = self._build(n)
            ensure_valid(u)
            self._members[n] = u
        return self._members[n]

    def members(self, n_max: int) -> List[Any]:
        return [self.member(n) for n in range(1, n_max + 1)]

    def oracle(self, n: int) -> Optional[CutOracle]:
        return None if self._oracle is None else self._oracle(n)

    def require_limit(self, candidate: Any = None) -> Any:
        limit = self.limit if candidate is None else candidate
        if limit is None:
            raise UsageError(f"family {self.name!r} has no candidate limit; pass one explicitly")
        ensure_valid(limit)
        return limit

    def __repr__(self) -> str:
        return f"SequenceFamily({self.name!r}, exact={self.exact})"


def uniform_ladder(resolution: int, breakpoints: Iterable[float] = ()) -> List[float]:
    """``i / resolution`` for ``i = 1..resolution`` plus the breakpoints in (0, 1]."""
    if int(resolution) < 1:
        raise UsageError(f"resolution must be positive, got {resolution}")
    grid = set((np.arange(1, int(resolution) + 1) / int(resolution)).tolist())
    grid.update(float(b) for b in breakpoints if 0.0 < float(b) <= 1.0)
    return sorted(grid)


def _discretized(oracle: CutOracle, resolution: int, breakpoints: Iterable[float]) -> StepFuzzySet:
    return from_oracle(RealLine(), oracle, uniform_ladder(resolution, breakpoints), preserve_support=True)


def _left_ray(b: float) -> IntervalUnion:
    return IntervalUnion([Interval(-math.inf, b)])


# exact real-line families


def shrinking_band() -> SequenceFamily:
    """``u_n`` has cut ``[0, 1]`` on ``(0, 1/n]`` and ``{0}`` above; ``u_n → 0̂`` in ``H_end``."""
    line = RealLine()

    def build(n: int) -> StepFuzzySet:
        if n == 1:
            return StepFuzzySet.characteristic(line, IntervalUnion.closed(0, 1))
        return StepFuzzySet(line, [1.0 / n, 1.0], [IntervalUnion.closed(0, 1), [0.0]])

    return SequenceFamily(
        "shrinking-band", line, build, limit=StepFuzzySet.singleton(line, 0.0),
        description="cut [0,1] below 1/n, {0} above; limit 0̂",
    )


def platform() -> SequenceFamily:
    """A platform at level 1/2 that the members approach from below."""
    line = RealLine()
    limit = StepFuzzySet(line, [0.5, 1.0], [IntervalUnion.closed(0, 1), [0.0]])

    def build(n: int) -> StepFuzzySet:
        low = 0.5 - 1.0 / n
        if low <= 0.0:
            return StepFuzzySet.singleton(line, 0.0)
        return StepFuzzySet(line, [low, 1.0], [IntervalUnion.closed(0, 1), [0.0]])

    return SequenceFamily(
        "platform", line, build, limit=limit,
        description="cut [0,1] up to 1/2 - 1/n, {0} above; limit has its platform at 1/2",
    )


def constant(base: Optional[Any] = None) -> SequenceFamily:
    line = RealLine()
    if base is None:
        base = StepFuzzySet(line, [0.5, 1.0], [IntervalUnion.closed(0, 2), IntervalUnion.closed(0.5, 1)])
    return SequenceFamily("constant", base.space, lambda n: base, limit=base, description="u_n = u")


def growing() -> SequenceFamily:
    """``χ_[0, n]``: equi-right-continuous, not relatively compact; no limit."""
    line = RealLine()
    return SequenceFamily(
        "growing", line, lambda n: StepFuzzySet.characteristic(line, IntervalUnion.closed(0, n)),
        description="characteristic functions of [0, n]",
    )


def dp_unbounded(bands: int = 64) -> SequenceFamily:
    """Cut ``[-k, k]`` on ``(1/(k+1), 1/k]``, truncated to ``[-n, n]`` on ``(0, 1/n]``.

    The untruncated set has infinite ``d_p`` distance to its truncations; the
    candidate limit is the member with ``bands`` bands.
    """
    line = RealLine()

    def build(n: int) -> StepFuzzySet:
        ks = range(n, 0, -1)
        return StepFuzzySet(line, [1.0 / k for k in ks], [IntervalUnion.closed(-k, k) for k in ks])

    bands = int(bands)
    if bands < 1:
        raise UsageError(f"bands must be positive, got {bands}")
    return SequenceFamily(
        "dp-unbounded", line, build, limit=build(bands),
        description=f"balls of radius k on (1/(k+1), 1/k], truncated at {bands} bands",
        size=bands,
    )


# finite space


def nce() -> SequenceFamily:
    """Over ``{0, 1}``: ``u_n`` is ``{0, 1}`` up to 1/n and ``{0}`` above.

    The sendograph images are Cauchy in ``H_send`` and converge to the element
    ``0̂`` with ghost ``{1}``, which is not itself a sendograph image.
    """
    space = FiniteSpace.discrete(["0", "1"])

    def build(n: int) -> StepFuzzySet:
        if n == 1:
            return StepFuzzySet.characteristic(space, ["0", "1"])
        return StepFuzzySet(space, [1.0 / n, 1.0], [["0", "1"], ["0"]])

    limit = SendoElement(StepFuzzySet.singleton(space, "0"), ghost=["1"])
    return SequenceFamily(
        "nce", space, build, limit=limit,
        description="two-point space; limit 0̂ with ghost {1}",
    )


# continuous-level families


def _snc_oracle(c: float) -> CutOracle:
    def cut(a: float) -> IntervalUnion:
        if a <= c:
            return IntervalUnion.real_line()
        return _left_ray((1.0 - c) / (a - c))

    return cut


def snc(resolution: int = DEFAULT_LEVELS) -> SequenceFamily:
    """Cuts ``(-∞, (1-c)/(α-c)]`` above level ``c`` and the whole line below.

    The limit has ``c = 1/3``, member ``n`` has ``c = (1/3)(n-1)/n``. Endograph
    distances vanish while the cut distance at level 1/3 is infinite.
    """

    def c_of(n: int) -> float:
        return (n - 1) / (3.0 * n)

    limit_oracle = _snc_oracle(1.0 / 3.0)
    return SequenceFamily(
        "snc", RealLine(),
        lambda n: _discretized(_snc_oracle(c_of(n)), resolution, [c_of(n), 1.0 / 3.0]),
        limit=_discretized(limit_oracle, resolution, [1.0 / 3.0]),
        description="left rays with a jump to the whole line at (1/3)(n-1)/n",
        pitch=1.0 / resolution,
        oracle=lambda n: _snc_oracle(c_of(n)),
        limit_oracle=limit_oracle,
    )


def _fnc_oracle(top: float) -> CutOracle:
    def cut(a: float) -> IntervalUnion:
        a = min(a, top)
        if a >= 1.0:
            return IntervalUnion.from_points([1.0])
        return IntervalUnion([Interval(-math.inf, -1.0 / (1.0 - a)), Interval.point(1.0)])

    return cut


def fnc(resolution: int = DEFAULT_LEVELS) -> SequenceFamily:
    """``[u]_1 = {1}`` and ``{1} ∪ (-∞, -1/(1-α)]`` below; ``u_n`` freezes at ``1 - 1/n``.

    ``H_end(u_n, u) = 1/n`` while the 1-cut distance stays infinite.
    """
    limit_oracle = _fnc_oracle(1.0)
    return SequenceFamily(
        "fnc", RealLine(),
        lambda n: _discretized(_fnc_oracle(1.0 - 1.0 / n), resolution, [1.0 - 1.0 / n]),
        limit=_discretized(limit_oracle, resolution, []),
        description="rays receding to -inf, frozen above 1 - 1/n",
        pitch=1.0 / resolution,
        oracle=lambda n: _fnc_oracle(1.0 - 1.0 / n),
        limit_oracle=limit_oracle,
    )


def _snp_oracle(n: int) -> CutOracle:
    # n == 0 is the limit
    def cut(a: float) -> IntervalUnion:
        if a == 0.0:
            return IntervalUnion([Interval(0.0, math.inf)])
        extra = float(n * n) if n and a <= 1.0 / n else 0.0
        return IntervalUnion.closed(0.0, 1.0 / a + extra)

    return cut


def snp(resolution: int = DEFAULT_LEVELS) -> SequenceFamily:
    """``[u]_α = [0, 1/α]``; ``u_n`` stretches the cuts below ``1/n`` by ``n²``.

    ``H_send(u_n, u) ≤ 1/n`` while ``d_p(u_n, u) = n^(2 - 1/p)``.
    """
    limit_oracle = _snp_oracle(0)
    return SequenceFamily(
        "snp", RealLine(),
        lambda n: _discretized(_snp_oracle(n), resolution, [1.0 / n]),
        limit=_discretized(limit_oracle, resolution, []),
        description="[0, 1/α] stretched by n² on (0, 1/n]",
        pitch=1.0 / resolution,
        oracle=_snp_oracle,
        limit_oracle=limit_oracle,
    )


FAMILIES: Dict[str, Callable[..., SequenceFamily]] = {
    "shrinking-band": shrinking_band,
    "snc": snc,
    "fnc": fnc,
    "snp": snp,
    "nce": nce,
    "platform": platform,
    "constant": constant,
    "growing": growing,
    "dp-unbounded": dp_unbounded,
}

# published ids of the same families
FAMILIES.update({"remark45": shrinking_band, "platform-fail": platform})


def make_family(name: str, **params: Any) -> SequenceFamily:
    """Build a named family; parameters the builder does not take are ignored."""
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise UsageError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    accepted = inspect.signature(builder).parameters
    kwargs = {k: v for k, v in params.items() if k in accepted and v is not None}
    dropped = sorted(set(params) - set(kwargs))
    if dropped:
        logger.debug("family %s ignores %s", name, dropped)
    return builder(**kwargs)
