"""Fuzzy-set representations, validation and level classifiers."""

from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.cuts import cut, strict_cut
from fuzzy_metric.fuzzy.levels import LevelJump, LevelSetReport, classify_levels, level_continuity
from fuzzy_metric.fuzzy.sendo import (
    ArrowReport,
    SendoElement,
    arrow_back,
    arrow_forward,
    as_sendo,
    is_arrow_image,
    pfbe_conditions,
    v_prime,
)
from fuzzy_metric.fuzzy.step import StepFuzzySet, from_oracle, merged_ladder
from fuzzy_metric.fuzzy.validation import ValidationReport, Violation, ensure_valid, validate

__all__ = [
    "ArrowReport",
    "BandFuzzySet",
    "LevelJump",
    "LevelSetReport",
    "SendoElement",
    "StepFuzzySet",
    "ValidationReport",
    "Violation",
    "arrow_back",
    "arrow_forward",
    "as_sendo",
    "classify_levels",
    "cut",
    "ensure_valid",
    "from_oracle",
    "is_arrow_image",
    "level_continuity",
    "merged_ladder",
    "pfbe_conditions",
    "strict_cut",
    "v_prime",
    "validate",
]
