"""ε-net certificates and the ε-approximation constructions."""

from fuzzy_metric.compactness.constructions import (
    ClosednessReport,
    closedness_within,
    flatten_below,
    project_to_grid,
    truncate_above,
)
from fuzzy_metric.compactness.nets import (
    NetCertificate,
    RelativeCompactnessReport,
    TotalBoundednessReport,
    greedy_eps_net,
    relative_compactness_report,
    total_boundedness_report,
    union_at_level,
    verify_coverage,
)

__all__ = [
    "ClosednessReport",
    "NetCertificate",
    "RelativeCompactnessReport",
    "TotalBoundednessReport",
    "closedness_within",
    "flatten_below",
    "greedy_eps_net",
    "project_to_grid",
    "relative_compactness_report",
    "total_boundedness_report",
    "truncate_above",
    "union_at_level",
    "verify_coverage",
]
