"""Finite unions of extended-real intervals with open/closed endpoints."""

from __future__ import annotations

import bisect
import math
from typing import Callable, Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

Number = Union[int, float]


class Interval:
    """A nonempty interval of the real line.

    Infinite endpoints are always open: the carrier is the real line, so
    ``-inf`` and ``+inf`` only ever describe a direction.
    """

    __slots__ = ("_lo", "_hi", "_lo_open", "_hi_open")

    def __init__(self, lo: Number, hi: Number, lo_open: bool = False, hi_open: bool = False):
        lo, hi = float(lo), float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("Interval endpoints must not be NaN")
        if lo == math.inf or hi == -math.inf:
            raise ValueError(f"Interval ({lo}, {hi}) is empty")
        lo_open = bool(lo_open) or math.isinf(lo)
        hi_open = bool(hi_open) or math.isinf(hi)
        if lo > hi or (lo == hi and (lo_open or hi_open)):
            raise ValueError(f"Interval with lo={lo}, hi={hi} is empty")
        # -0.0 and 0.0 must serialize identically
        self._lo = lo + 0.0
        self._hi = hi + 0.0
        self._lo_open = lo_open
        self._hi_open = hi_open

    @classmethod
    def closed(cls, lo: Number, hi: Number) -> Interval:
        return cls(lo, hi)

    @classmethod
    def open(cls, lo: Number, hi: Number) -> Interval:
        return cls(lo, hi, True, True)

    @classmethod
    def point(cls, x: Number) -> Interval:
        return cls(x, x)

    @property
    def lo(self) -> float:
        return self._lo

    @property
    def hi(self) -> float:
        return self._hi

    @property
    def lo_open(self) -> bool:
        return self._lo_open

    @property
    def hi_open(self) -> bool:
        return self._hi_open

    @property
    def is_degenerate(self) -> bool:
        return self._lo == self._hi

    def contains(self, x: float) -> bool:
        above = x > self._lo or (x == self._lo and not self._lo_open)
        below = x < self._hi or (x == self._hi and not self._hi_open)
        return above and below

    def key(self) -> Tuple[float, bool, float, bool]:
        return (self._lo, self._lo_open, self._hi, self._hi_open)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return False
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        left = "(" if self._lo_open else "["
        right = ")" if self._hi_open else "]"
        return f"{left}{_fmt(self._lo)}, {_fmt(self._hi)}{right}"


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return f"{x:g}"


IntervalLike = Union[Interval, Tuple[Number, Number], Tuple[Number, Number, bool, bool]]


def _as_interval(item: IntervalLike) -> Interval:
    if isinstance(item, Interval):
        return item
    if len(item) == 2:
        return Interval(item[0], item[1])
    return Interval(*item)


class IntervalUnion:
    """Canonical finite union of pairwise-disjoint intervals.

    Canonical means sorted by lower endpoint, disjoint, and no two neighbours
    can be merged. The empty union is representable; only the metric
    operations reject it.
    """

    __slots__ = ("_intervals", "_los")

    def __init__(self, intervals: Iterable[IntervalLike] = ()):
        self._intervals: Tuple[Interval, ...] = tuple(_canonical([_as_interval(i) for i in intervals]))
        self._los = [iv.lo for iv in self._intervals]

    @classmethod
    def empty(cls) -> IntervalUnion:
        return cls()

    @classmethod
    def closed(cls, lo: Number, hi: Number) -> IntervalUnion:
        return cls([Interval(lo, hi)])

    @classmethod
    def open(cls, lo: Number, hi: Number) -> IntervalUnion:
        return cls([Interval(lo, hi, True, True)])

    @classmethod
    def real_line(cls) -> IntervalUnion:
        return cls([Interval(-math.inf, math.inf)])

    @classmethod
    def from_points(cls, xs: Iterable[Number]) -> IntervalUnion:
        return cls([Interval.point(x) for x in xs])

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return self._intervals

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def is_empty(self) -> bool:
        return not self._intervals

    def contains(self, x: float) -> bool:
        i = bisect.bisect_right(self._los, x) - 1
        return i >= 0 and self._intervals[i].contains(x)

    def contains_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized membership test."""
        xs = np.asarray(xs, dtype=np.float64)
        if not self._intervals:
            return np.zeros(xs.shape, dtype=bool)
        los, his, lo_open, hi_open = self.arrays()
        idx = np.searchsorted(los, xs, side="right") - 1
        safe = np.clip(idx, 0, len(los) - 1)
        lo, hi = los[safe], his[safe]
        above = (xs > lo) | ((xs == lo) & ~lo_open[safe])
        below = (xs < hi) | ((xs == hi) & ~hi_open[safe])
        return (idx >= 0) & above & below

    def covers_cells(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Membership of the cells of :func:`elementary_cells`.

        Every endpoint of this union must be a break. A point cell is tested
        directly; an open gap ``(l, r)`` is inside iff one interval has
        ``lo <= l`` and ``r <= hi``.
        """
        left = np.asarray(left, dtype=np.float64)
        right = np.asarray(right, dtype=np.float64)
        points = left == right
        out = self.contains_many(np.where(points, left, 0.0)) & points
        if not self._intervals:
            return out
        los, his, _, _ = self.arrays()
        idx = np.searchsorted(los, left, side="right") - 1
        safe = np.clip(idx, 0, len(los) - 1)
        gap = (idx >= 0) & (his[safe] >= right) & ~points
        return out | gap

    def arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        los = np.array([iv.lo for iv in self._intervals], dtype=np.float64)
        his = np.array([iv.hi for iv in self._intervals], dtype=np.float64)
        lo_open = np.array([iv.lo_open for iv in self._intervals], dtype=bool)
        hi_open = np.array([iv.hi_open for iv in self._intervals], dtype=bool)
        return los, his, lo_open, hi_open

    def endpoints(self) -> List[float]:
        """Sorted finite endpoints."""
        pts = {p for iv in self._intervals for p in (iv.lo, iv.hi) if math.isfinite(p)}
        return sorted(pts)

    def bounded_below(self) -> bool:
        return not self._intervals or math.isfinite(self._intervals[0].lo)

    def bounded_above(self) -> bool:
        return not self._intervals or math.isfinite(self._intervals[-1].hi)

    def is_bounded(self) -> bool:
        return self.bounded_below() and self.bounded_above()

    def is_closed(self) -> bool:
        return all(
            (iv.lo_open is False or math.isinf(iv.lo)) and (iv.hi_open is False or math.isinf(iv.hi))
            for iv in self._intervals
        )

    def is_compact(self) -> bool:
        return self.is_closed() and self.is_bounded()

    def measure(self) -> float:
        return sum(iv.hi - iv.lo for iv in self._intervals)

    def hull(self) -> IntervalUnion:
        if not self._intervals:
            return self
        first, last = self._intervals[0], self._intervals[-1]
        return IntervalUnion([Interval(first.lo, last.hi, first.lo_open, last.hi_open)])

    def closure(self) -> IntervalUnion:
        return IntervalUnion(Interval(iv.lo, iv.hi) for iv in self._intervals)

    def union(self, other: IntervalUnion) -> IntervalUnion:
        return IntervalUnion(self._intervals + other._intervals)

    def intersection(self, other: IntervalUnion) -> IntervalUnion:
        return _combine(self, other, lambda a, b: a and b)

    def difference(self, other: IntervalUnion) -> IntervalUnion:
        return _combine(self, other, lambda a, b: a and not b)

    def is_subset(self, other: IntervalUnion) -> bool:
        return self.difference(other).is_empty()

    def key(self) -> Tuple[Tuple[float, bool, float, bool], ...]:
        return tuple(iv.key() for iv in self._intervals)

    def __or__(self, other: IntervalUnion) -> IntervalUnion:
        return self.union(other)

    def __and__(self, other: IntervalUnion) -> IntervalUnion:
        return self.intersection(other)

    def __sub__(self, other: IntervalUnion) -> IntervalUnion:
        return self.difference(other)

    def __le__(self, other: IntervalUnion) -> bool:
        return self.is_subset(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalUnion):
            return False
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if not self._intervals:
            return "IntervalUnion(∅)"
        return "IntervalUnion(" + " ∪ ".join(repr(iv) for iv in self._intervals) + ")"


def _canonical(items: Sequence[Interval]) -> List[Interval]:
    if not items:
        return []
    # closed lower endpoints sort first so they absorb open ones
    ordered = sorted(items, key=lambda iv: (iv.lo, iv.lo_open))
    out: List[Interval] = []
    cur = ordered[0]
    for nxt in ordered[1:]:
        touches = nxt.lo < cur.hi or (nxt.lo == cur.hi and not (cur.hi_open and nxt.lo_open))
        if touches:
            if nxt.hi > cur.hi:
                hi, hi_open = nxt.hi, nxt.hi_open
            elif nxt.hi == cur.hi:
                hi, hi_open = cur.hi, cur.hi_open and nxt.hi_open
            else:
                hi, hi_open = cur.hi, cur.hi_open
            cur = Interval(cur.lo, hi, cur.lo_open, hi_open)
        else:
            out.append(cur)
            cur = nxt
    out.append(cur)
    return out


def elementary_cells(breaks: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    """Split the line at ``breaks`` into open gaps and point cells.

    Returns ``(left, right)`` in left-to-right order; point cells have
    ``left == right``. A gap between adjacent floats holds no float, so gap
    membership is read from interval ends by :meth:`IntervalUnion.covers_cells`.
    """
    e = np.unique(np.asarray(breaks, dtype=np.float64))
    m = len(e)
    if m == 0:
        return np.array([-math.inf]), np.array([math.inf])
    left = np.empty(2 * m + 1)
    right = np.empty(2 * m + 1)
    left[0::2] = np.concatenate(([-math.inf], e))
    right[0::2] = np.concatenate((e, [math.inf]))
    left[1::2] = e
    right[1::2] = e
    return left, right


def _combine(a: IntervalUnion, b: IntervalUnion, rule: Callable[[bool, bool], bool]) -> IntervalUnion:
    left, right = elementary_cells(a.endpoints() + b.endpoints())
    keep = [rule(x, y) for x, y in zip(a.covers_cells(left, right), b.covers_cells(left, right))]
    return _from_cells(left, right, keep)


def _from_cells(left: np.ndarray, right: np.ndarray, keep: Sequence[bool]) -> IntervalUnion:
    out: List[Interval] = []
    start = None
    start_open = False
    for k, inside in enumerate(keep):
        point_cell = left[k] == right[k]
        if inside and start is None:
            start = left[k]
            start_open = not point_cell
        elif not inside and start is not None:
            # previous cell closed the run; its right end is our upper endpoint
            end = right[k - 1]
            end_open = left[k - 1] != right[k - 1]
            out.append(Interval(start, end, start_open, end_open))
            start = None
    if start is not None:
        k = len(keep) - 1
        out.append(Interval(start, right[k], start_open, left[k] != right[k]))
    return IntervalUnion(out)
