"""Piecewise-constant fuzzy sets on the real line, USC or not."""

from __future__ import annotations

from typing import Iterable, List, Tuple

from fuzzy_metric.core.space import RealLine
from fuzzy_metric.fuzzy.step import check_level
from fuzzy_metric.intervals.interval import IntervalUnion


class BandFuzzySet:
    """Membership ``value`` on each ``piece``; 0 off the pieces.

    Unlike :class:`StepFuzzySet` nothing forces the cuts to be closed, so
    these sets only support cuts and the level classifiers; the metrics
    reject them.
    """

    __slots__ = ("_space", "_pieces", "_normal", "_report")

    def __init__(self, pieces: Iterable[Tuple[IntervalUnion, float]], normal: bool = True):
        self._space = RealLine()
        self._pieces: Tuple[Tuple[IntervalUnion, float], ...] = tuple(
            (piece, float(value)) for piece, value in pieces
        )
        self._normal = bool(normal)
        self._report = None

    @property
    def space(self) -> RealLine:
        return self._space

    @property
    def pieces(self) -> Tuple[Tuple[IntervalUnion, float], ...]:
        return self._pieces

    @property
    def normal(self) -> bool:
        return self._normal

    def values(self) -> List[float]:
        """Distinct positive membership values, ascending."""
        return sorted({v for _, v in self._pieces if v > 0})

    def membership(self, x: float) -> float:
        for piece, value in self._pieces:
            if piece.contains(x):
                return value
        return 0.0

    def _union_where(self, keep) -> IntervalUnion:
        out = IntervalUnion.empty()
        for piece, value in self._pieces:
            if keep(value):
                out = out | piece
        return out

    def cut(self, alpha: float) -> IntervalUnion:
        alpha = check_level(alpha)
        if alpha == 0.0:
            return self.support()
        return self._union_where(lambda v: v >= alpha)

    def strict_cut(self, alpha: float) -> IntervalUnion:
        alpha = check_level(alpha)
        return self._union_where(lambda v: v > alpha)

    def support(self) -> IntervalUnion:
        return self._union_where(lambda v: v > 0).closure()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BandFuzzySet):
            return False
        return sorted(self._pieces, key=_piece_key) == sorted(other._pieces, key=_piece_key) and (
            self._normal == other._normal
        )

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._pieces, key=_piece_key)))

    def __repr__(self) -> str:
        inner = ", ".join(f"{piece!r}: {value:g}" for piece, value in self._pieces)
        return f"BandFuzzySet({inner})"


def _piece_key(item: Tuple[IntervalUnion, float]) -> Tuple:
    return (item[1], item[0].key())
