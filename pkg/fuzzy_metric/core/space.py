"""Ground metric spaces.

Three variants carry every computation: a finite space given by a distance
table, a Euclidean space of coordinate tuples, and the extended real line.
Each space also owns the algebra of its closed sets, so the fuzzy layer never
needs to know which variant it is working over:

* finite / Euclidean sets are ``frozenset`` objects of points (labels or
  coordinate tuples); they are closed and bounded by construction.
* real-line sets are :class:`~fuzzy_metric.intervals.IntervalUnion` values.
"""

from __future__ import annotations

import math
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

from fuzzy_metric.core.errors import DomainError, UsageError
from fuzzy_metric.intervals.envelope import (
    point_to_union_distance,
    union_directed_hausdorff,
    union_hausdorff,
)
from fuzzy_metric.intervals.interval import IntervalUnion

PointSet = frozenset
ClosedSet = Union[frozenset, IntervalUnion]

# rows of the distance matrix evaluated at once
_CHUNK = 2048


class GroundSpace:
    """Common interface of the three ground spaces."""

    kind: str = ""

    def distance(self, x: Any, y: Any) -> float:
        return float(self.pairwise([x], [y])[0, 0])

    def pairwise(self, a: Sequence[Any], b: Sequence[Any]) -> np.ndarray:
        raise NotImplementedError

    def point(self, x: Any) -> Any:
        """Validate and normalize a point of the carrier."""
        raise NotImplementedError

    def make_set(self, items: Iterable[Any]) -> ClosedSet:
        raise NotImplementedError

    def empty_set(self) -> ClosedSet:
        return self.make_set(())

    # set algebra

    def union(self, a: ClosedSet, b: ClosedSet) -> ClosedSet:
        return a | b

    def intersection(self, a: ClosedSet, b: ClosedSet) -> ClosedSet:
        return a & b

    def difference(self, a: ClosedSet, b: ClosedSet) -> ClosedSet:
        return a - b

    def is_subset(self, a: ClosedSet, b: ClosedSet) -> bool:
        return a <= b

    def is_empty(self, a: ClosedSet) -> bool:
        return len(a) == 0

    def contains(self, a: ClosedSet, x: Any) -> bool:
        return self.point(x) in a

    def closure(self, a: ClosedSet) -> ClosedSet:
        return a

    def is_closed(self, a: ClosedSet) -> bool:
        return True

    def is_bounded(self, a: ClosedSet) -> bool:
        return True

    def is_compact(self, a: ClosedSet) -> bool:
        return self.is_closed(a) and self.is_bounded(a)

    def union_all(self, sets: Iterable[ClosedSet]) -> ClosedSet:
        out = self.empty_set()
        for s in sets:
            out = self.union(out, s)
        return out

    def points(self, a: ClosedSet) -> List[Any]:
        """Deterministically ordered points of a finite set."""
        return sorted(a, key=_sort_key)

    # distances between sets

    def directed_hausdorff(self, a: ClosedSet, b: ClosedSet) -> float:
        if self.is_empty(a) or self.is_empty(b):
            raise DomainError("Hausdorff distance is undefined for empty sets")
        return directed_min_max(self, self.points(a), self.points(b))

    def hausdorff(self, a: ClosedSet, b: ClosedSet) -> float:
        if a == b and not self.is_empty(a):
            return 0.0
        return max(self.directed_hausdorff(a, b), self.directed_hausdorff(b, a))

    def distance_to_set(self, x: Any, s: ClosedSet) -> float:
        if self.is_empty(s):
            raise DomainError("distance to an empty set is undefined")
        return float(self.pairwise([self.point(x)], self.points(s)).min())

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind}


class FiniteSpace(GroundSpace):
    """A finite metric space given by labels and a distance table."""

    kind = "finite"

    def __init__(self, labels: Sequence[Hashable], table: Union[Sequence[Sequence[float]], np.ndarray]):
        # labels are strings so documents may spell them as numbers
        self._labels: Tuple[str, ...] = tuple(_label(label) for label in labels)
        if len(set(self._labels)) != len(self._labels):
            raise ValueError("Point labels must be distinct")
        if not self._labels:
            raise ValueError("A metric space needs at least one point")
        self._index = {label: i for i, label in enumerate(self._labels)}
        self._table = np.array(table, dtype=np.float64)
        n = len(self._labels)
        if self._table.shape != (n, n):
            raise ValueError(f"Distance table must be {n}x{n}, got {self._table.shape}")
        problems = self.check_metric()
        if problems:
            raise ValueError("Not a metric: " + "; ".join(problems))

    @classmethod
    def from_points(cls, points: Sequence[float]) -> FiniteSpace:
        """Subspace of the real line labelled by the values themselves."""
        xs = np.asarray(points, dtype=np.float64)
        return cls([_label(x) for x in xs], np.abs(xs[:, None] - xs[None, :]))

    @classmethod
    def discrete(cls, labels: Sequence[Hashable]) -> FiniteSpace:
        n = len(labels)
        return cls(labels, 1.0 - np.eye(n))

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def table(self) -> np.ndarray:
        return self._table.copy()

    def check_metric(self, tol: float = 1e-12) -> List[str]:
        """Return the violated metric axioms (empty when the table is a metric)."""
        d = self._table
        problems = []
        if np.isnan(d).any() or (d < 0).any():
            problems.append("negative or NaN distance")
        if np.any(np.abs(np.diag(d)) > 0):
            problems.append("nonzero diagonal")
        if not np.array_equal(d, d.T):
            problems.append("asymmetric table")
        off = d + np.eye(len(d))
        if (off <= 0).any():
            problems.append("distinct points at distance 0")
        # d[i, k] <= d[i, j] + d[j, k] for all triples
        for j in range(len(d)):
            if (d > d[:, j : j + 1] + d[j : j + 1, :] + tol).any():
                problems.append("triangle inequality")
                break
        return problems

    def point(self, x: Any) -> str:
        label = _label(x)
        if label not in self._index:
            raise UsageError(f"{x!r} is not a point of this space")
        return label

    def make_set(self, items: Iterable[Any]) -> frozenset:
        return frozenset(self.point(x) for x in items)

    def points(self, a: ClosedSet) -> List[Any]:
        return sorted(a, key=self._index.__getitem__)

    def pairwise(self, a: Sequence[Any], b: Sequence[Any]) -> np.ndarray:
        ia = [self._index[self.point(x)] for x in a]
        ib = [self._index[self.point(y)] for y in b]
        return self._table[np.ix_(ia, ib)]

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "labels": list(self._labels), "table": self._table.tolist()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSpace):
            return False
        return self._labels == other._labels and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self.kind, self._labels))

    def __repr__(self) -> str:
        return f"FiniteSpace({list(self._labels)})"


class EuclideanSpace(GroundSpace):
    """Points of R^m as coordinate tuples."""

    kind = "euclidean"

    def __init__(self, dim: int = 2):
        if int(dim) < 1:
            raise ValueError("Euclidean dimension must be at least 1")
        self._dim = int(dim)

    @property
    def dim(self) -> int:
        return self._dim

    def point(self, x: Any) -> Tuple[float, ...]:
        coords = tuple(float(c) for c in np.atleast_1d(np.asarray(x, dtype=np.float64)))
        if len(coords) != self._dim:
            raise UsageError(f"Expected {self._dim} coordinates, got {len(coords)}")
        if not all(math.isfinite(c) for c in coords):
            raise UsageError(f"Coordinates must be finite: {coords}")
        return tuple(c + 0.0 for c in coords)

    def make_set(self, items: Iterable[Any]) -> frozenset:
        return frozenset(self.point(x) for x in items)

    def pairwise(self, a: Sequence[Any], b: Sequence[Any]) -> np.ndarray:
        pa = np.array([self.point(x) for x in a], dtype=np.float64).reshape(-1, self._dim)
        pb = np.array([self.point(y) for y in b], dtype=np.float64).reshape(-1, self._dim)
        return cdist(pa, pb)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "dim": self._dim}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EuclideanSpace) and self._dim == other._dim

    def __hash__(self) -> int:
        return hash((self.kind, self._dim))

    def __repr__(self) -> str:
        return f"EuclideanSpace(dim={self._dim})"


class RealLine(GroundSpace):
    """The real line; points may be ``±inf`` for limit directions."""

    kind = "real-line"

    def point(self, x: Any) -> float:
        value = float(x)
        if math.isnan(value):
            raise UsageError("NaN is not a point of the real line")
        return value + 0.0

    def make_set(self, items: Iterable[Any]) -> IntervalUnion:
        if isinstance(items, IntervalUnion):
            return items
        return IntervalUnion.from_points(self.point(x) for x in items)

    def pairwise(self, a: Sequence[Any], b: Sequence[Any]) -> np.ndarray:
        xa = np.array([self.point(x) for x in a], dtype=np.float64)
        xb = np.array([self.point(y) for y in b], dtype=np.float64)
        with np.errstate(invalid="ignore"):
            d = np.abs(xa[:, None] - xb[None, :])
        # |inf - inf| is 0 for equal signs; NaN only arises there
        return np.where(np.isnan(d), 0.0, d)

    def is_empty(self, a: ClosedSet) -> bool:
        return a.is_empty()

    def contains(self, a: ClosedSet, x: Any) -> bool:
        return a.contains(self.point(x))

    def is_subset(self, a: ClosedSet, b: ClosedSet) -> bool:
        return a.is_subset(b)

    def closure(self, a: ClosedSet) -> ClosedSet:
        return a.closure()

    def is_closed(self, a: ClosedSet) -> bool:
        return a.is_closed()

    def is_bounded(self, a: ClosedSet) -> bool:
        return a.is_bounded()

    def points(self, a: ClosedSet) -> List[Any]:
        if not all(iv.is_degenerate for iv in a):
            raise UsageError("set is not a finite point set")
        return [iv.lo for iv in a]

    def directed_hausdorff(self, a: ClosedSet, b: ClosedSet) -> float:
        return union_directed_hausdorff(a, b)

    def hausdorff(self, a: ClosedSet, b: ClosedSet) -> float:
        if a == b and not a.is_empty():
            return 0.0
        return union_hausdorff(a, b)

    def distance_to_set(self, x: Any, s: ClosedSet) -> float:
        return point_to_union_distance(self.point(x), s)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RealLine)

    def __hash__(self) -> int:
        return hash(self.kind)

    def __repr__(self) -> str:
        return "RealLine()"


def directed_min_max(
    space: GroundSpace,
    a: Sequence[Any],
    b: Sequence[Any],
    ha: Optional[np.ndarray] = None,
    hb: Optional[np.ndarray] = None,
    cap: bool = False,
) -> float:
    """``max_x min_y [d(x, y) + (h(x) - h(y))^+]``, optionally capped by ``h(x)``.

    Without heights this is the plain directed Hausdorff distance between two
    finite point lists. Rows are processed in chunks so desk-scale inputs do
    not materialize the full distance matrix at once.
    """
    if len(a) == 0 or len(b) == 0:
        raise DomainError("Hausdorff distance is undefined for empty sets")
    best = 0.0
    for start in range(0, len(a), _CHUNK):
        rows = a[start : start + _CHUNK]
        d = space.pairwise(rows, b)
        if ha is not None and hb is not None:
            h_rows = ha[start : start + _CHUNK]
            d = d + np.maximum(0.0, h_rows[:, None] - hb[None, :])
            inner = d.min(axis=1)
            if cap:
                inner = np.minimum(inner, h_rows)
        else:
            inner = d.min(axis=1)
        best = max(best, float(inner.max()))
    return best


def _sort_key(x: Any) -> Any:
    return (str(type(x)), x)


def _label(x: Any) -> str:
    """Integral numbers spell as integers, other floats by their shortest round-trip repr."""
    if isinstance(x, (bool, np.bool_)):
        return str(x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        v = float(x)
        return str(int(v)) if v.is_integer() else repr(v)
    return str(x)
