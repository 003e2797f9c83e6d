"""Extended nonnegative reals.

Distances live in [0, +inf]. They are plain Python floats: IEEE arithmetic
already saturates (``x + inf == inf``), orders totally and never compares a
finite value equal to an infinite one. The helpers here validate, format and
compare them.
"""

from __future__ import annotations

import math
from typing import Union

ExtNonNegReal = float

INF = math.inf
ABS_TOL = 1e-12

_POS_SENTINELS = ("+inf", "inf", "+infinity", "infinity")
_NEG_SENTINELS = ("-inf", "-infinity")


def as_ext(value: Union[int, float]) -> ExtNonNegReal:
    """Validate and convert to an extended nonnegative real."""
    x = float(value)
    if math.isnan(x) or x < 0:
        raise ValueError(f"Not an extended nonnegative real: {value!r}")
    return x


def ext_add(a: ExtNonNegReal, b: ExtNonNegReal) -> ExtNonNegReal:
    if math.isinf(a) or math.isinf(b):
        return INF
    return a + b


def ext_isclose(a: float, b: float, tol: float = ABS_TOL) -> bool:
    """Absolute-tolerance comparison; infinities only match themselves."""
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= tol


def ext_le(a: float, b: float, tol: float = ABS_TOL) -> bool:
    """``a <= b`` up to ``tol``, exact when either side is infinite."""
    if math.isinf(b):
        return b > 0 or a == b
    if math.isinf(a):
        return a < 0
    return a <= b + tol


def parse_ext(text: Union[str, int, float]) -> float:
    """Parse a number or one of the ``"+inf"`` / ``"-inf"`` sentinels."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return float(text)
    if not isinstance(text, str):
        raise ValueError(f"Expected a number, got {text!r}")
    s = text.strip().lower()
    if s in _POS_SENTINELS:
        return INF
    if s in _NEG_SENTINELS:
        return -INF
    return float(s)


def format_ext(x: float) -> Union[str, float]:
    """Inverse of :func:`parse_ext`; finite values stay floats."""
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return float(x)
