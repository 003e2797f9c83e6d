"""Trajectory containers and finite-prefix verdicts.

A finite prefix never decides a limit. Every verdict here reads the last
quartile of indices (the tail window) against the first quartile (the head
window) and is labelled with the prefix length it was computed at.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from fuzzy_metric.core.config import VANISH_TOL, worker_count
from fuzzy_metric.core.errors import PostconditionError, UsageError
from fuzzy_metric.core.extreal import format_ext

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _window(values: Sequence[float]) -> int:
    return max(1, len(values) // 4)


def tail_window(values: Sequence[float]) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64)
    return v[-_window(v) :]


def head_window(values: Sequence[float]) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64)
    return v[: _window(v)]


def tail_max(values: Sequence[float]) -> float:
    return float(tail_window(values).max())


def trend(values: Sequence[float], tol: float = VANISH_TOL) -> str:
    """One of ``vanished``, ``decreasing``, ``persistent``, ``growing``, ``infinite``.

    Only ``vanished`` (tail maximum below ``tol``) counts as vanishing.
    ``decreasing`` means the tail maximum is at most half the head maximum
    but still above ``tol``; a trajectory that levels off at a positive
    value can read ``decreasing`` on a short prefix.
    """
    if len(values) == 0:
        raise UsageError("empty trajectory")
    tail, head = tail_window(values), head_window(values)
    if np.isinf(tail).any():
        return "infinite"
    top = float(tail.max())
    if top < tol:
        return "vanished"
    if top <= 0.5 * float(head.max()):
        return "decreasing"
    if float(tail.min()) > float(head.max()) + tol:
        return "growing"
    return "persistent"


def vanishing(values: Sequence[float], tol: float = VANISH_TOL) -> bool:
    """Tail maximum below ``tol``."""
    if len(values) == 0:
        raise UsageError("empty trajectory")
    return tail_max(values) < tol


def map_indices(fn: Callable[[int], T], indices: Sequence[int], workers: Optional[int] = None) -> List[T]:
    """Evaluate ``fn`` per index, on a thread pool when more than one worker is allowed."""
    count = worker_count(workers)
    if count > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=count) as pool:
            return list(pool.map(fn, indices))
    return [fn(n) for n in indices]


class SequenceDiagnostics:
    """Every trajectory computed for one family prefix ``n = 1..N``.

    ``metrics`` maps ``h_end``, ``h_send``, ``h_zero``, ``d_inf`` and ``d_p``
    to per-index arrays; ``levels``, ``inner`` and ``outer`` map a level to a
    per-index array; ``modulus`` holds ``(deltas, values)``.
    """

    def __init__(self, family: str, indices: Sequence[int], tol: float = VANISH_TOL):
        if not indices:
            raise UsageError("a diagnostic needs at least one index")
        self.family = family
        self.indices = [int(n) for n in indices]
        self.tol = tol
        self.label = f"diagnostic at N={self.indices[-1]}"
        self.metrics: Dict[str, np.ndarray] = {}
        self.levels: Dict[float, np.ndarray] = {}
        self.inner: Dict[float, np.ndarray] = {}
        self.outer: Dict[float, np.ndarray] = {}
        self.modulus: Optional[Tuple[np.ndarray, np.ndarray]] = None
        self.flags: Dict[str, Any] = {}
        self.notes: List[str] = []

    @staticmethod
    def _checked(name: str, values: Sequence[float]) -> np.ndarray:
        arr = np.asarray(values, dtype=np.float64)
        if np.isnan(arr).any() or (arr < 0).any():
            raise PostconditionError(f"trajectory {name} has negative or NaN entries")
        return arr

    def add_metric(self, name: str, values: Sequence[float]) -> None:
        self.metrics[name] = self._checked(name, values)

    def add_level(self, alpha: float, values: Sequence[float]) -> None:
        self.levels[float(alpha)] = self._checked(f"level {alpha:g}", values)

    def add_residuals(self, alpha: float, inner: Sequence[float], outer: Sequence[float]) -> None:
        self.inner[float(alpha)] = self._checked(f"inner {alpha:g}", inner)
        self.outer[float(alpha)] = self._checked(f"outer {alpha:g}", outer)

    def set_modulus(self, deltas: Sequence[float], values: Sequence[float]) -> None:
        self.modulus = (np.asarray(deltas, dtype=np.float64), self._checked("modulus", values))

    def verdict(self, name: str) -> str:
        return trend(self.metrics[name], self.tol)

    def verdicts(self) -> Dict[str, str]:
        return {name: self.verdict(name) for name in sorted(self.metrics)}

    def vanishes(self, name: str) -> bool:
        return vanishing(self.metrics[name], self.tol)

    def to_rows(self) -> List[Dict[str, Any]]:
        """Flat records ``{series, level, n, value}`` in a fixed order."""
        rows: List[Dict[str, Any]] = []
        for name in sorted(self.metrics):
            for n, v in zip(self.indices, self.metrics[name]):
                rows.append({"series": name, "level": "", "n": n, "value": format_ext(v)})
        for series, table in (("level", self.levels), ("inner", self.inner), ("outer", self.outer)):
            for alpha in sorted(table):
                for n, v in zip(self.indices, table[alpha]):
                    rows.append({"series": series, "level": alpha, "n": n, "value": format_ext(v)})
        if self.modulus is not None:
            for delta, v in zip(*self.modulus):
                rows.append(
                    {"series": "modulus", "level": float(delta), "n": self.indices[-1], "value": format_ext(v)}
                )
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "family": self.family,
            "N": self.indices[-1],
            "tol": self.tol,
            "verdicts": self.verdicts(),
            "flags": self.flags,
            "notes": list(self.notes),
            "rows": self.to_rows(),
        }

    def __repr__(self) -> str:
        return f"SequenceDiagnostics({self.family!r}, {self.label}, series={sorted(self.metrics)})"
