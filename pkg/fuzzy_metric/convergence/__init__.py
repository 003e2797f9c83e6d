"""Sequence families and finite-prefix convergence diagnostics."""

from fuzzy_metric.convergence.diagnostics import SequenceDiagnostics, map_indices, tail_max, trend, vanishing
from fuzzy_metric.convergence.families import FAMILIES, SequenceFamily, make_family, uniform_ladder
from fuzzy_metric.convergence.sequences import (
    CauchyUnionReport,
    cauchy_union_limit,
    decomposition_trajectory,
    equi_rc_modulus,
    gamma_residuals,
    level_decomposition_test,
)
from fuzzy_metric.convergence.criteria import (
    DominatedReport,
    SendCharacterization,
    dominated_convergence_check,
    send_characterization,
)

__all__ = [
    "FAMILIES",
    "CauchyUnionReport",
    "DominatedReport",
    "SendCharacterization",
    "SequenceDiagnostics",
    "SequenceFamily",
    "cauchy_union_limit",
    "decomposition_trajectory",
    "dominated_convergence_check",
    "equi_rc_modulus",
    "gamma_residuals",
    "level_decomposition_test",
    "make_family",
    "map_indices",
    "send_characterization",
    "tail_max",
    "trend",
    "uniform_ladder",
    "vanishing",
]
