"""Graph and level-wise metrics between fuzzy sets."""

from fuzzy_metric.metrics.graph import directed_end, directed_send, end_metric, height_bands, prepare_pair, send_metric
from fuzzy_metric.metrics.level import (
    LevelProfile,
    OracleEstimate,
    dp_metric,
    dp_via_oracle,
    level_profile,
    sup_metric,
)
from fuzzy_metric.metrics.oracle import graph_grid_directed, graph_grid_oracle, height_profile
from fuzzy_metric.metrics.report import (
    AenBound,
    MetricReport,
    aen_bound_check,
    metric_function,
    metric_report,
    pairwise_matrix,
)

__all__ = [
    "AenBound",
    "LevelProfile",
    "MetricReport",
    "OracleEstimate",
    "aen_bound_check",
    "directed_end",
    "directed_send",
    "dp_metric",
    "dp_via_oracle",
    "end_metric",
    "graph_grid_directed",
    "graph_grid_oracle",
    "height_bands",
    "height_profile",
    "level_profile",
    "metric_function",
    "metric_report",
    "pairwise_matrix",
    "prepare_pair",
    "send_metric",
    "sup_metric",
]
