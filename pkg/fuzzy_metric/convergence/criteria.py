"""Prefix checks of the two d_p convergence criteria."""

from __future__ import annotations

import logging
import math
from typing import Any, Dict, Optional

import numpy as np

from fuzzy_metric.convergence.diagnostics import map_indices, trend
from fuzzy_metric.convergence.families import SequenceFamily
from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.core.extreal import format_ext
from fuzzy_metric.fuzzy.sendo import as_sendo
from fuzzy_metric.fuzzy.step import merged_ladder
from fuzzy_metric.metrics.graph import end_metric, send_metric
from fuzzy_metric.metrics.level import check_p, level_profile

logger = logging.getLogger(__name__)


class DominatedReport:
    """Level envelope ``F(α) = max_{n ≤ N} H([u_n]_α, [u]_α)`` and its p-th power integral.

    When ``F^p`` is integrable, ``H_end`` and ``d_p`` vanish together; ``consistent``
    is ``None`` when the envelope is not integrable on the prefix.
    """

    def __init__(self, uppers: np.ndarray, envelope: np.ndarray, p: float, h_end: str, d_p: str, n_max: int):
        self.uppers = uppers
        self.envelope = envelope
        self.p = p
        widths = np.diff(np.concatenate(([0.0], uppers)))
        positive = widths > 0
        if np.isinf(envelope[positive]).any():
            self.integral = math.inf
        else:
            self.integral = float(np.sum(envelope[positive] ** p * widths[positive]))
        self.h_end = h_end
        self.d_p = d_p
        self.label = f"diagnostic at N={n_max}"

    @property
    def integrable(self) -> bool:
        return math.isfinite(self.integral)

    @property
    def consistent(self) -> Optional[bool]:
        if not self.integrable:
            return None
        return (self.h_end == "vanished") == (self.d_p == "vanished")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "p": self.p,
            "integral": format_ext(self.integral),
            "integrable": self.integrable,
            "h_end": self.h_end,
            "d_p": self.d_p,
            "consistent": self.consistent,
        }


def dominated_convergence_check(
    family: SequenceFamily,
    limit: Any = None,
    n_max: int = 20,
    p: float = 1.0,
    workers: Optional[int] = None,
) -> DominatedReport:
    p = check_p(p)
    u = family.require_limit(limit)
    indices = list(range(1, int(n_max) + 1))
    members = [family.member(n) for n in indices]
    ladder = merged_ladder(as_sendo(u).base, *(as_sendo(m).base for m in members))
    profiles = map_indices(lambda n: level_profile(members[n - 1], u, extra_levels=ladder), indices, workers)
    envelope = np.max(np.vstack([prof.values for prof in profiles]), axis=0)
    h_end = [end_metric(m, u) for m in members]
    d_p = [prof.lp(p) for prof in profiles]
    report = DominatedReport(
        np.asarray(ladder), envelope, p, trend(h_end, family.tol), trend(d_p, family.tol), indices[-1]
    )
    logger.debug("dominated check on %s: integral %s over %d levels", family.name, report.integral, len(ladder))
    return report


class SendCharacterization:
    """Verdicts of ``h_send``, ``h_zero`` and ``d_p`` and whether
    ``h_send → 0`` iff ``h_zero → 0`` and ``d_p → 0`` holds on the prefix."""

    def __init__(self, h_send: str, h_zero: str, d_p: str, n_max: int):
        self.h_send = h_send
        self.h_zero = h_zero
        self.d_p = d_p
        self.label = f"diagnostic at N={n_max}"

    @property
    def consistent(self) -> bool:
        send = self.h_send == "vanished"
        return send == (self.h_zero == "vanished" and self.d_p == "vanished")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "h_send": self.h_send,
            "h_zero": self.h_zero,
            "d_p": self.d_p,
            "consistent": self.consistent,
        }


def send_characterization(
    family: SequenceFamily,
    limit: Any = None,
    n_max: int = 20,
    p: float = 1.0,
    workers: Optional[int] = None,
) -> SendCharacterization:
    """Needs a limit with compact 0-level."""
    p = check_p(p)
    u = as_sendo(family.require_limit(limit))
    if not u.space.is_compact(u.zero_level()):
        raise UsageError("the sendograph characterization needs a limit with compact support")
    indices = list(range(1, int(n_max) + 1))
    space = u.space

    def row(n: int):
        m = as_sendo(family.member(n))
        zero = space.hausdorff(m.zero_level(), u.zero_level())
        return send_metric(m, u), zero, level_profile(m, u).lp(p)

    rows = map_indices(row, indices, workers)
    tol = family.tol
    return SendCharacterization(
        trend([r[0] for r in rows], tol),
        trend([r[1] for r in rows], tol),
        trend([r[2] for r in rows], tol),
        indices[-1],
    )
