"""Elements of P¹: a step fuzzy set plus extra closed mass at level 0."""

from __future__ import annotations

from typing import Any, Dict, Iterable, Optional, Tuple

from fuzzy_metric.core.errors import DomainError
from fuzzy_metric.core.space import ClosedSet, GroundSpace
from fuzzy_metric.fuzzy.step import StepFuzzySet, check_level


class SendoElement:
    """``⟨v⟩_0 = [base]_0 ∪ ghost`` and ``⟨v⟩_alpha = [base]_alpha`` for alpha > 0."""

    __slots__ = ("_base", "_ghost", "_report")

    def __init__(self, base: StepFuzzySet, ghost: Optional[Iterable[Any]] = None):
        self._base = base
        space = base.space
        self._ghost: ClosedSet = space.empty_set() if ghost is None else space.make_set(ghost)
        self._report = None

    @property
    def base(self) -> StepFuzzySet:
        return self._base

    @property
    def ghost(self) -> ClosedSet:
        return self._ghost

    @property
    def space(self) -> GroundSpace:
        return self._base.space

    @property
    def thresholds(self) -> Tuple[float, ...]:
        return self._base.thresholds

    @property
    def cuts(self) -> Tuple[ClosedSet, ...]:
        return self._base.cuts

    def zero_level(self) -> ClosedSet:
        return self.space.union(self._base.support(), self._ghost)

    def cut(self, alpha: float) -> ClosedSet:
        if check_level(alpha) == 0.0:
            return self.zero_level()
        return self._base.cut(alpha)

    def strict_cut(self, alpha: float) -> ClosedSet:
        return self._base.strict_cut(alpha)

    def support(self) -> ClosedSet:
        return self.zero_level()

    def membership(self, x: Any) -> float:
        return self._base.membership(x)

    def with_threshold(self, alpha: float) -> SendoElement:
        return SendoElement(self._base.with_threshold(alpha), self._ghost)

    def key(self) -> Tuple[Any, ClosedSet]:
        return (self._base.key(), self.zero_level())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SendoElement):
            return False
        return self.space == other.space and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SendoElement({self._base!r}, ghost={self._ghost!r})"


def arrow_forward(u: StepFuzzySet) -> SendoElement:
    """``→u``: the sendograph image, no ghost."""
    return SendoElement(u)


def arrow_back(v: SendoElement) -> StepFuzzySet:
    """``←v``: drop the ghost; the 0-cut becomes ``closure(C_1)`` again."""
    return v.base


def v_prime(v: SendoElement) -> SendoElement:
    return arrow_forward(arrow_back(v))


def as_sendo(u: Any) -> SendoElement:
    if isinstance(u, SendoElement):
        return u
    if isinstance(u, StepFuzzySet):
        return arrow_forward(u)
    raise TypeError(f"expected a step fuzzy set or sendograph element, got {type(u).__name__}")


class ArrowReport:
    """Which of the six equivalent arrow-image conditions hold for ``v``.

    ``i``: v is an arrow image; ``ii``: ⟨v⟩_0 is the closure of the positive
    levels; ``iii``: v = v′; ``iv``: ⟨v⟩_0 = [←v]_0; ``v``: v is the image of
    a set with compact support; ``vi``: H(⟨v⟩_δ, ⟨v⟩_0) → 0 as δ → 0+.
    """

    def __init__(self, conditions: Dict[str, bool], mode: str):
        self.conditions = conditions
        self.mode = mode

    @property
    def is_image(self) -> bool:
        return self.conditions["i"]

    def consistent(self) -> bool:
        """In USCB mode all six conditions agree."""
        if self.mode != "USCB":
            return True
        return len(set(self.conditions.values())) == 1

    def to_dict(self) -> Dict[str, Any]:
        return {"mode": self.mode, "conditions": dict(self.conditions), "is_image": self.is_image}

    def __repr__(self) -> str:
        held = ",".join(k for k, v in self.conditions.items() if v)
        return f"ArrowReport(mode={self.mode}, holds=[{held}])"


def pfbe_conditions(v: SendoElement) -> ArrowReport:
    space = v.space
    base = v.base
    zero = v.zero_level()
    positive_closure = space.closure(base.cuts[0])

    ii = zero == positive_closure
    iii = v == v_prime(v)
    iv = zero == arrow_back(v).cut(0.0)
    i = space.is_subset(v.ghost, positive_closure)
    uscb = space.is_compact(zero)
    fifth = i and space.is_compact(positive_closure)
    try:
        vi = space.hausdorff(base.cuts[0], zero) == 0.0
    except DomainError:
        vi = False
    return ArrowReport(
        {"i": i, "ii": ii, "iii": iii, "iv": iv, "v": fifth, "vi": vi},
        "USCB" if uscb else "USC",
    )


def is_arrow_image(v: SendoElement) -> bool:
    return pfbe_conditions(v).is_image
