"""Versioned YAML documents holding a ground space and named fuzzy sets.

Example::

    version: 1
    space: {kind: real-line}
    sets:
      - name: u
        kind: steps
        thresholds: [0.5, 1.0]
        cuts:
          - [{lo: 0, hi: 3}]
          - [{lo: 1, hi: 2}]
    collections: {pair: [u]}

Set kinds are ``steps``, ``sendo`` (steps plus a ``ghost`` set), ``discrete``
(a ``grades`` table, stored back as steps) and ``bands`` (real line only).
Real-line sets are lists of intervals ``{lo, hi, lo_open, hi_open}`` or bare
numbers for points; ``"+inf"`` and ``"-inf"`` are accepted wherever a number is.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import yaml

from fuzzy_metric.core.errors import DocumentError
from fuzzy_metric.core.extreal import format_ext, parse_ext
from fuzzy_metric.core.space import ClosedSet, EuclideanSpace, FiniteSpace, GroundSpace, RealLine
from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.sendo import SendoElement
from fuzzy_metric.fuzzy.step import StepFuzzySet
from fuzzy_metric.fuzzy.validation import validate
from fuzzy_metric.intervals.interval import Interval, IntervalUnion

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

SET_KINDS = ("steps", "sendo", "discrete", "bands")

_TOP_KEYS = {"version", "space", "sets", "collections"}
_SET_KEYS = {
    "steps": {"name", "kind", "thresholds", "cuts"},
    "sendo": {"name", "kind", "thresholds", "cuts", "ghost"},
    "discrete": {"name", "kind", "grades"},
    "bands": {"name", "kind", "pieces", "normal"},
}
_INTERVAL_KEYS = {"lo", "hi", "lo_open", "hi_open"}

FuzzyValue = Union[StepFuzzySet, SendoElement, BandFuzzySet]


class Document:
    """A ground space, named sets in file order and named collections of them."""

    def __init__(
        self,
        space: GroundSpace,
        sets: Iterable[Tuple[str, FuzzyValue]],
        collections: Optional[Mapping[str, List[str]]] = None,
    ):
        self.space = space
        self._sets: Dict[str, FuzzyValue] = {}
        for name, value in sets:
            if name in self._sets:
                raise DocumentError(f"duplicate set name {name!r}")
            self._sets[name] = value
        self.collections: Dict[str, List[str]] = {k: list(v) for k, v in (collections or {}).items()}
        for cname, members in self.collections.items():
            for m in members:
                if m not in self._sets:
                    raise DocumentError(f"unknown set {m!r}", f"collections.{cname}")

    @property
    def names(self) -> List[str]:
        return list(self._sets)

    def items(self) -> List[Tuple[str, FuzzyValue]]:
        return list(self._sets.items())

    def get(self, name: Optional[str] = None) -> FuzzyValue:
        """The named set, or the only set when ``name`` is omitted."""
        if name is None:
            if len(self._sets) != 1:
                raise DocumentError(f"document holds {len(self._sets)} sets; name one of {self.names}")
            return next(iter(self._sets.values()))
        try:
            return self._sets[name]
        except KeyError:
            raise DocumentError(f"no set named {name!r}; have {self.names}") from None

    def collection(self, name: Optional[str] = None) -> List[FuzzyValue]:
        """A named collection; without a name, every set in file order."""
        if name is None:
            return list(self._sets.values())
        if name not in self.collections:
            raise DocumentError(f"no collection named {name!r}")
        return [self._sets[m] for m in self.collections[name]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Document):
            return False
        return (
            self.space == other.space
            and self.items() == other.items()
            and self.collections == other.collections
        )

    def __repr__(self) -> str:
        return f"Document({self.space!r}, sets={self.names})"


# parsing


def _number(value: Any, where: str) -> float:
    try:
        return parse_ext(value)
    except (TypeError, ValueError):
        raise DocumentError(f"expected a number or +inf/-inf, got {value!r}", where) from None


def _level(value: Any, where: str) -> float:
    x = _number(value, where)
    if not 0.0 <= x <= 1.0:
        raise DocumentError(f"level {x} outside [0, 1]", where)
    return x


def _flag(value: Any, where: str) -> bool:
    if not isinstance(value, bool):
        raise DocumentError(f"expected true or false, got {value!r}", where)
    return value


def _list(value: Any, where: str) -> List[Any]:
    if not isinstance(value, list):
        raise DocumentError(f"expected a list, got {type(value).__name__}", where)
    return value


def _mapping(value: Any, where: str, allowed: Optional[set] = None) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise DocumentError(f"expected a mapping, got {type(value).__name__}", where)
    if allowed is not None:
        extra = sorted(str(k) for k in set(value) - allowed)
        if extra:
            raise DocumentError(f"unknown keys {extra}", where)
    return value


def _parse_space(value: Any, where: str = "space") -> GroundSpace:
    data = _mapping(value, where)
    kind = data.get("kind")
    try:
        if kind == "real-line":
            _mapping(data, where, {"kind"})
            return RealLine()
        if kind == "euclidean":
            _mapping(data, where, {"kind", "dim"})
            return EuclideanSpace(int(data.get("dim", 2)))
        if kind == "finite":
            _mapping(data, where, {"kind", "labels", "table"})
            labels = _list(data.get("labels"), f"{where}.labels")
            table = [
                [_number(x, f"{where}.table[{i}][{j}]") for j, x in enumerate(_list(row, f"{where}.table[{i}]"))]
                for i, row in enumerate(_list(data.get("table"), f"{where}.table"))
            ]
            return FiniteSpace(labels, table)
    except DocumentError:
        raise
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc), where) from None
    raise DocumentError(f"unknown space kind {kind!r}; expected real-line, finite or euclidean", f"{where}.kind")


def _parse_interval(item: Any, where: str) -> Interval:
    if not isinstance(item, dict):
        x = _number(item, where)
        return Interval.point(x)
    data = _mapping(item, where, _INTERVAL_KEYS)
    for key in ("lo", "hi"):
        if key not in data:
            raise DocumentError(f"missing {key!r}", where)
    lo = _number(data["lo"], f"{where}.lo")
    hi = _number(data["hi"], f"{where}.hi")
    lo_open = _flag(data.get("lo_open", False), f"{where}.lo_open")
    hi_open = _flag(data.get("hi_open", False), f"{where}.hi_open")
    try:
        return Interval(lo, hi, lo_open, hi_open)
    except ValueError as exc:
        raise DocumentError(str(exc), where) from None


def _parse_set(space: GroundSpace, value: Any, where: str) -> ClosedSet:
    items = _list(value, where)
    if isinstance(space, RealLine):
        return IntervalUnion(_parse_interval(item, f"{where}[{i}]") for i, item in enumerate(items))
    try:
        return space.make_set(items)
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc), where) from None


def _parse_steps(space: GroundSpace, data: Mapping[str, Any], where: str) -> StepFuzzySet:
    thresholds = [
        _level(a, f"{where}.thresholds[{i}]")
        for i, a in enumerate(_list(data.get("thresholds"), f"{where}.thresholds"))
    ]
    cuts = [
        _parse_set(space, c, f"{where}.cuts[{i}]") for i, c in enumerate(_list(data.get("cuts"), f"{where}.cuts"))
    ]
    try:
        return StepFuzzySet(space, thresholds, cuts)
    except ValueError as exc:
        raise DocumentError(str(exc), where) from None


def _parse_discrete(space: GroundSpace, data: Mapping[str, Any], where: str) -> StepFuzzySet:
    raw = data.get("grades")
    grades: Dict[Any, float] = {}
    if isinstance(space, EuclideanSpace):
        for i, row in enumerate(_list(raw, f"{where}.grades")):
            entry = _mapping(row, f"{where}.grades[{i}]", {"point", "grade"})
            try:
                point = space.point(entry.get("point"))
            except (TypeError, ValueError) as exc:
                raise DocumentError(str(exc), f"{where}.grades[{i}].point") from None
            grades[point] = _level(entry.get("grade"), f"{where}.grades[{i}].grade")
    else:
        for key, g in _mapping(raw, f"{where}.grades").items():
            try:
                point = space.point(key)
            except (TypeError, ValueError) as exc:
                raise DocumentError(str(exc), f"{where}.grades.{key}") from None
            grades[point] = _level(g, f"{where}.grades.{key}")
    try:
        return StepFuzzySet.from_membership(space, grades)
    except ValueError as exc:
        raise DocumentError(str(exc), f"{where}.grades") from None


def _parse_bands(space: GroundSpace, data: Mapping[str, Any], where: str) -> BandFuzzySet:
    if not isinstance(space, RealLine):
        raise DocumentError("bands are only defined on the real line", f"{where}.kind")
    pieces = []
    for i, row in enumerate(_list(data.get("pieces"), f"{where}.pieces")):
        at = f"{where}.pieces[{i}]"
        entry = _mapping(row, at, {"set", "value"})
        pieces.append((_parse_set(space, entry.get("set"), f"{at}.set"), _level(entry.get("value"), f"{at}.value")))
    return BandFuzzySet(pieces, normal=_flag(data.get("normal", True), f"{where}.normal"))


def _parse_entry(space: GroundSpace, value: Any, where: str) -> Tuple[str, FuzzyValue]:
    entry = _mapping(value, where)
    kind = entry.get("kind")
    if kind not in SET_KINDS:
        raise DocumentError(f"unknown set kind {kind!r}; expected one of {list(SET_KINDS)}", f"{where}.kind")
    _mapping(entry, where, _SET_KEYS[kind])
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise DocumentError("every set needs a nonempty string name", f"{where}.name")
    if kind == "steps":
        return name, _parse_steps(space, entry, where)
    if kind == "sendo":
        base = _parse_steps(space, entry, where)
        return name, SendoElement(base, _parse_set(space, entry.get("ghost", []), f"{where}.ghost"))
    if kind == "discrete":
        return name, _parse_discrete(space, entry, where)
    return name, _parse_bands(space, entry, where)


def parse_document(data: Any, check: bool = True) -> Document:
    """Build a document from decoded YAML.

    With ``check`` every set must also pass validation; the error names the
    offending set.
    """
    top = _mapping(data, "document", _TOP_KEYS)
    if top.get("version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported version {top.get('version')!r}; expected {FORMAT_VERSION}", "version")
    if "space" not in top:
        raise DocumentError("missing space", "space")
    space = _parse_space(top["space"])
    entries = _list(top.get("sets"), "sets")
    if not entries:
        raise DocumentError("a document needs at least one set", "sets")
    sets = [_parse_entry(space, e, f"sets[{i}]") for i, e in enumerate(entries)]
    if check:
        for i, (name, value) in enumerate(sets):
            report = validate(value)
            if not report.ok:
                raise DocumentError(f"set {name!r} is invalid: {report.summary()}", f"sets[{i}]")
    collections = {}
    for cname, members in _mapping(top.get("collections", {}), "collections").items():
        collections[str(cname)] = [str(m) for m in _list(members, f"collections.{cname}")]
    doc = Document(space, sets, collections)
    logger.debug("parsed %r", doc)
    return doc


def load_document(source: Union[str, Path], check: bool = True) -> Document:
    """Read a document from a path, or from stdin when ``source`` is ``-``."""
    try:
        if str(source) == "-":
            text = sys.stdin.read()
        else:
            text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {source}: {exc.strerror}") from None
    return loads(text, check)


def loads(text: str, check: bool = True) -> Document:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}" if mark is not None else ""
        raise DocumentError(f"malformed YAML: {getattr(exc, 'problem', exc)}", where) from None
    return parse_document(data, check)


# serialization


def _set_out(space: GroundSpace, s: ClosedSet) -> List[Any]:
    if isinstance(space, RealLine):
        return [
            {"lo": format_ext(iv.lo), "hi": format_ext(iv.hi), "lo_open": iv.lo_open, "hi_open": iv.hi_open}
            for iv in s
        ]
    if isinstance(space, EuclideanSpace):
        return [list(p) for p in space.points(s)]
    return list(space.points(s))


def serialize_levels(levels: IntervalUnion) -> List[Dict[str, Any]]:
    """A union of levels in the interval form used for real-line cuts."""
    return _set_out(RealLine(), levels)


def _steps_out(u: StepFuzzySet) -> Dict[str, Any]:
    return {
        "kind": "steps",
        "thresholds": list(u.thresholds),
        "cuts": [_set_out(u.space, c) for c in u.cuts],
    }


def serialize_set(name: str, value: FuzzyValue) -> Dict[str, Any]:
    if isinstance(value, SendoElement):
        out = _steps_out(value.base)
        out.update(kind="sendo", ghost=_set_out(value.space, value.ghost))
    elif isinstance(value, StepFuzzySet):
        out = _steps_out(value)
    elif isinstance(value, BandFuzzySet):
        out = {
            "kind": "bands",
            "normal": value.normal,
            "pieces": [{"set": _set_out(value.space, p), "value": v} for p, v in value.pieces],
        }
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    out["name"] = name
    return out


def serialize_document(doc: Document) -> Dict[str, Any]:
    """Canonical plain-data form; ``parse_document`` inverts it."""
    out: Dict[str, Any] = {
        "version": FORMAT_VERSION,
        "space": doc.space.describe(),
        "sets": [serialize_set(name, value) for name, value in doc.items()],
    }
    if doc.collections:
        out["collections"] = {k: list(v) for k, v in doc.collections.items()}
    return out


def dumps(data: Any) -> str:
    """YAML text with sorted keys; used for documents and command results alike."""
    return yaml.safe_dump(data, sort_keys=True, default_flow_style=None, allow_unicode=True)


def dump_document(doc: Document) -> str:
    return dumps(serialize_document(doc))
