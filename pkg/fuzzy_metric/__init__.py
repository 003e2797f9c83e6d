"""
fuzzy-metric: metrics on fuzzy sets through their endographs and sendographs.

Compute endograph, sendograph, supremum and L_p distances between fuzzy sets
given by their cuts, and study convergence and compactness with them.

Quick Start:
    from fuzzy_metric import RealLine, StepFuzzySet, IntervalUnion, distance

    line = RealLine()
    u = StepFuzzySet(line, [0.5, 1.0], [IntervalUnion.closed(0, 3), IntervalUnion.closed(1, 2)])
    v = StepFuzzySet.singleton(line, 1.5)

    distance(u, v, "hend")     # endograph metric, at most 1
    distance(u, v, "hsend")    # sendograph metric
    distance(u, v, "dp", p=2)  # L_2 metric of the level-wise distances

    # Everything at once, with the inequality chain checked
    from fuzzy_metric import metric_report
    metric_report(u, v).to_dict()

    # Per-level behaviour along a known sequence
    from fuzzy_metric import make_family, level_decomposition_test
    level_decomposition_test(make_family("platform"), n_max=40).flags
"""

# core before intervals: the interval envelope imports the error hierarchy
from fuzzy_metric.core import (
    ABS_TOL,
    DocumentError,
    DomainError,
    EuclideanSpace,
    FiniteSpace,
    FuzzyMetricError,
    GroundSpace,
    PostconditionError,
    PreconditionError,
    RealLine,
    UsageError,
)
from fuzzy_metric.intervals import Interval, IntervalUnion
from fuzzy_metric.fuzzy import (
    BandFuzzySet,
    SendoElement,
    StepFuzzySet,
    arrow_forward,
    classify_levels,
    is_arrow_image,
    validate,
)
from fuzzy_metric.metrics import (
    dp_metric,
    end_metric,
    metric_function,
    metric_report,
    send_metric,
    sup_metric,
)
from fuzzy_metric.convergence import level_decomposition_test, make_family
from fuzzy_metric.io import dump_document, load_document


def distance(u, v, metric: str = "hend", p: float = 1.0) -> float:
    """Distance between two fuzzy sets.

    Args:
        u, v: Step fuzzy sets or sendograph elements over the same space
        metric: One of ``hend``, ``hsend``, ``dinf`` or ``dp``
        p: Exponent for ``dp``, at least 1

    Example:
        distance(StepFuzzySet.singleton(line, 0), StepFuzzySet.singleton(line, 3), "hend")  # 1.0
    """
    return metric_function(metric, p)(u, v)


__version__ = "0.1.0"
__all__ = [
    "ABS_TOL",
    "BandFuzzySet",
    "DocumentError",
    "DomainError",
    "EuclideanSpace",
    "FiniteSpace",
    "FuzzyMetricError",
    "GroundSpace",
    "Interval",
    "IntervalUnion",
    "PostconditionError",
    "PreconditionError",
    "RealLine",
    "SendoElement",
    "StepFuzzySet",
    "UsageError",
    "arrow_forward",
    "classify_levels",
    "distance",
    "dp_metric",
    "dump_document",
    "end_metric",
    "is_arrow_image",
    "level_decomposition_test",
    "load_document",
    "make_family",
    "metric_report",
    "send_metric",
    "sup_metric",
    "validate",
]
