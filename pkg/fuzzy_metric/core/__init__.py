"""Extended reals, ground spaces and point-set Hausdorff distances."""

from fuzzy_metric.core.errors import (
    DocumentError,
    DomainError,
    FuzzyMetricError,
    PostconditionError,
    PreconditionError,
    UsageError,
)
from fuzzy_metric.core.extreal import (
    ABS_TOL,
    INF,
    ExtNonNegReal,
    as_ext,
    ext_add,
    ext_isclose,
    ext_le,
    format_ext,
    parse_ext,
)
from fuzzy_metric.core.hausdorff import (
    ProductPoint,
    point_set_directed_hausdorff,
    point_set_hausdorff,
    product_distance,
)
from fuzzy_metric.core.space import EuclideanSpace, FiniteSpace, GroundSpace, RealLine

__all__ = [
    "ABS_TOL",
    "INF",
    "DocumentError",
    "DomainError",
    "EuclideanSpace",
    "ExtNonNegReal",
    "FiniteSpace",
    "FuzzyMetricError",
    "GroundSpace",
    "PostconditionError",
    "PreconditionError",
    "ProductPoint",
    "RealLine",
    "UsageError",
    "as_ext",
    "ext_add",
    "ext_isclose",
    "ext_le",
    "format_ext",
    "parse_ext",
    "point_set_directed_hausdorff",
    "point_set_hausdorff",
    "product_distance",
]
