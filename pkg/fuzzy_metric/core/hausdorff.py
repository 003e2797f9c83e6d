"""Hausdorff distances between finite point sets and the product metric."""

from __future__ import annotations

from typing import Any, Iterable, Optional

from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.core.space import GroundSpace, directed_min_max


def point_set_directed_hausdorff(a: Iterable[Any], b: Iterable[Any], space: GroundSpace) -> float:
    """``max_{x in A} min_{y in B} d(x, y)``.

    Example:
        >>> point_set_directed_hausdorff([0, 1], [0], RealLine())
        1.0
    """
    pa = [space.point(x) for x in a]
    pb = [space.point(y) for y in b]
    if not pa or not pb:
        raise DomainError("Hausdorff distance is undefined for empty sets")
    return directed_min_max(space, pa, pb)


def point_set_hausdorff(a: Iterable[Any], b: Iterable[Any], space: GroundSpace) -> float:
    pa, pb = list(a), list(b)
    return max(
        point_set_directed_hausdorff(pa, pb, space),
        point_set_directed_hausdorff(pb, pa, space),
    )


class ProductPoint:
    """A point of ``X x [0, 1]``: a base point with a height."""

    __slots__ = ("_space", "_base", "_height")

    def __init__(self, space: GroundSpace, base: Any, height: float):
        height = float(height)
        if not 0.0 <= height <= 1.0:
            raise ValueError(f"Height must lie in [0, 1], got {height}")
        self._space = space
        self._base = space.point(base)
        self._height = height

    @property
    def space(self) -> GroundSpace:
        return self._space

    @property
    def base(self) -> Any:
        return self._base

    @property
    def height(self) -> float:
        return self._height

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProductPoint):
            return False
        return (self._space, self._base, self._height) == (other._space, other._base, other._height)

    def __hash__(self) -> int:
        return hash((self._base, self._height))

    def __repr__(self) -> str:
        return f"ProductPoint({self._base!r}, {self._height})"


def product_distance(p: ProductPoint, q: ProductPoint, space: Optional[GroundSpace] = None) -> float:
    """``d(x, y) + |alpha - beta|`` on ``X x [0, 1]``.

    The base metric is the points' own space; a given ``space`` must be that one.
    """
    if p.space != q.space:
        raise UsageError("product points live over different spaces")
    if space is not None and space != p.space:
        raise UsageError(f"product points live over {p.space!r}, not {space!r}")
    return p.space.distance(p.base, q.base) + abs(p.height - q.height)
