"""Functional spelling of the cut queries."""

from __future__ import annotations

from typing import Union

from fuzzy_metric.core.space import ClosedSet
from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.sendo import SendoElement
from fuzzy_metric.fuzzy.step import StepFuzzySet

AnyFuzzy = Union[StepFuzzySet, BandFuzzySet, SendoElement]


def cut(u: AnyFuzzy, alpha: float) -> ClosedSet:
    """``[u]_alpha``; at ``alpha = 0`` the closed support (ghost included)."""
    return u.cut(alpha)


def strict_cut(u: AnyFuzzy, alpha: float) -> ClosedSet:
    """``{u > alpha}``."""
    return u.strict_cut(alpha)
