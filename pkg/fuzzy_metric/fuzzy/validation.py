"""Validation against the representation conditions for cut families.

Clauses named in reports:

* ``ladder``     thresholds strictly increasing in (0, 1], ending at 1
* ``(i)``        every cut is closed (compact where the mode requires it)
* ``(ii)``       cuts are nested, so each cut is the intersection of those below
* ``(iii)``      the 0-level is the closure of the positive levels; it is
  derived from the first cut, so it never appears in a report
* ``normality``  the 1-cut is nonempty
* ``ghost``      the extra 0-level mass is closed
* ``pieces``     band pieces are disjoint with distinct values in [0, 1]
"""

from __future__ import annotations

from typing import Any, Dict, List, Union

from fuzzy_metric.core.errors import UsageError
from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.sendo import SendoElement
from fuzzy_metric.fuzzy.step import StepFuzzySet

FuzzyInput = Union[StepFuzzySet, BandFuzzySet, SendoElement]


class Violation:
    __slots__ = ("clause", "message")

    def __init__(self, clause: str, message: str):
        self.clause = clause
        self.message = message

    def to_dict(self) -> Dict[str, str]:
        return {"clause": self.clause, "message": self.message}

    def __repr__(self) -> str:
        return f"{self.clause}: {self.message}"


class ValidationReport:
    """Every violated invariant; an empty report means the input is valid."""

    def __init__(self, kind: str, violations: List[Violation], mode: str = ""):
        self.kind = kind
        self.violations = violations
        self.mode = mode

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> List[str]:
        return [v.clause for v in self.violations]

    def summary(self) -> str:
        if self.ok:
            return f"valid {self.kind}" + (f" ({self.mode})" if self.mode else "")
        return "; ".join(repr(v) for v in self.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "valid": self.ok,
            "violations": [v.to_dict() for v in self.violations],
        }


def _check_step(u: StepFuzzySet, out: List[Violation]) -> None:
    space = u.space
    a = u.thresholds
    if any(x <= 0.0 or x > 1.0 for x in a):
        out.append(Violation("ladder", "thresholds must lie in (0, 1]"))
    if any(x >= y for x, y in zip(a, a[1:])):
        out.append(Violation("ladder", "thresholds must be strictly increasing"))
    if a[-1] != 1.0:
        out.append(Violation("ladder", f"top threshold is {a[-1]:g}, expected 1"))
    for i, c in enumerate(u.cuts):
        if not space.is_closed(c):
            out.append(Violation("(i)", f"cut {i + 1} at level {a[i]:g} is not closed"))
    for i in range(len(u.cuts) - 1):
        if not space.is_subset(u.cuts[i + 1], u.cuts[i]):
            out.append(
                Violation("(ii)", f"cut {i + 2} (level {a[i + 1]:g}) is not contained in cut {i + 1}")
            )
    if space.is_empty(u.cuts[-1]):
        out.append(Violation("normality", "the 1-cut is empty"))


def _check_band(u: BandFuzzySet, out: List[Violation]) -> None:
    values = [v for _, v in u.pieces]
    if any(v < 0.0 or v > 1.0 for v in values):
        out.append(Violation("pieces", "values must lie in [0, 1]"))
    if len(set(values)) != len(values):
        out.append(Violation("pieces", "two pieces carry the same value"))
    for i, (p, _) in enumerate(u.pieces):
        for j in range(i + 1, len(u.pieces)):
            if not (p & u.pieces[j][0]).is_empty():
                out.append(Violation("pieces", f"pieces {i + 1} and {j + 1} overlap"))
    if u.normal and not any(v == 1.0 and not p.is_empty() for p, v in u.pieces):
        out.append(Violation("normality", "no point attains membership 1"))


def validate(u: FuzzyInput) -> ValidationReport:
    """Validate a representation and cache the report on the value."""
    if u._report is not None:
        return u._report
    out: List[Violation] = []
    mode = ""
    if isinstance(u, StepFuzzySet):
        _check_step(u, out)
        mode = u.levels_class()
        kind = "steps"
    elif isinstance(u, SendoElement):
        _check_step(u.base, out)
        space = u.space
        if not space.is_closed(u.ghost):
            out.append(Violation("ghost", "ghost set is not closed"))
        mode = "USCB" if space.is_compact(u.zero_level()) else "USC"
        kind = "sendo"
    elif isinstance(u, BandFuzzySet):
        _check_band(u, out)
        kind = "bands"
    else:
        raise TypeError(f"cannot validate {type(u).__name__}")
    report = ValidationReport(kind, out, mode)
    u._report = report
    return report


def ensure_valid(u: FuzzyInput) -> None:
    report = validate(u)
    if not report.ok:
        raise UsageError(f"invalid {report.kind} input: {report.summary()}")
