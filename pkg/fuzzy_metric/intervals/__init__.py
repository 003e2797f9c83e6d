"""Interval unions over the extended real line and their exact distances."""

from fuzzy_metric.intervals.envelope import (
    PieceSet,
    brute_force_directed_hausdorff,
    distance_to_union_many,
    point_to_union_distance,
    union_directed_hausdorff,
    union_hausdorff,
    weighted_distance_sup,
)
from fuzzy_metric.intervals.interval import Interval, IntervalUnion

__all__ = [
    "Interval",
    "IntervalUnion",
    "PieceSet",
    "brute_force_directed_hausdorff",
    "distance_to_union_many",
    "point_to_union_distance",
    "union_directed_hausdorff",
    "union_hausdorff",
    "weighted_distance_sup",
]
