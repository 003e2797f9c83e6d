"""Shared defaults and the worker-count environment variable."""

from __future__ import annotations

import logging
import os
from typing import Optional

from fuzzy_metric.core.extreal import ABS_TOL

logger = logging.getLogger(__name__)

# trajectories below this are treated as vanished
VANISH_TOL = 1e-9

# level count for discretizing oracle-defined families
DEFAULT_LEVELS = 400

WORKERS_ENV = "FUZZY_METRIC_WORKERS"

__all__ = ["ABS_TOL", "DEFAULT_LEVELS", "VANISH_TOL", "WORKERS_ENV", "worker_count"]


def worker_count(workers: Optional[int] = None) -> int:
    """Explicit ``workers`` wins; otherwise the environment, otherwise 1."""
    if workers is not None:
        return max(1, int(workers))
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        value = int(raw)
    except ValueError:
        if raw:
            logger.warning("ignoring %s=%r: not an integer", WORKERS_ENV, raw)
        return 1
    return max(1, value)
