"""Command-line front end.

Every command reads YAML documents (``-`` for stdin) and writes YAML that
parses back with :mod:`yaml`. Sets are referenced as ``FILE`` when the file
holds one set, or ``FILE#NAME`` otherwise.

Exit codes: 0 success, 1 validation or expectation failure, 2 usage or parse
error.
"""

from __future__ import annotations

import csv
import io
import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich.text import Text

from fuzzy_metric.cli.gallery import GALLERY, GalleryResult, run_gallery
from fuzzy_metric.compactness import (
    flatten_below,
    project_to_grid,
    relative_compactness_report,
    truncate_above,
)
from fuzzy_metric.convergence import (
    FAMILIES,
    SequenceDiagnostics,
    decomposition_trajectory,
    dominated_convergence_check,
    equi_rc_modulus,
    gamma_residuals,
    level_decomposition_test,
    make_family,
    send_characterization,
)
from fuzzy_metric.core.errors import (
    DocumentError,
    DomainError,
    PostconditionError,
    PreconditionError,
    UsageError,
)
from fuzzy_metric.core.extreal import format_ext, parse_ext
from fuzzy_metric.core.space import EuclideanSpace, GroundSpace, RealLine
from fuzzy_metric.fuzzy.band import BandFuzzySet
from fuzzy_metric.fuzzy.levels import classify_levels, level_continuity
from fuzzy_metric.fuzzy.sendo import SendoElement, pfbe_conditions
from fuzzy_metric.fuzzy.validation import validate
from fuzzy_metric.io.document import Document, dump_document, dumps, load_document, serialize_levels
from fuzzy_metric.metrics.report import metric_report

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Endograph, sendograph, supremum and L_p metrics on fuzzy sets.",
    add_completion=False,
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)


class Metric(str, Enum):
    hend = "hend"
    hsend = "hsend"
    dinf = "dinf"
    dp = "dp"


class SeqTest(str, Enum):
    trajectory = "trajectory"
    levels = "levels"
    gamma = "gamma"
    modulus = "modulus"
    dominated = "dominated"
    characterization = "characterization"


class OutFormat(str, Enum):
    doc = "doc"
    csv = "csv"


class GalleryFormat(str, Enum):
    table = "table"
    doc = "doc"


@app.callback()
def _configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug records to stderr."),
) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False, show_time=False)],
        force=True,
    )


def _error(message: str) -> None:
    err_console.print(f"error: {message}", style="bold red", markup=False, highlight=False)


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except (DocumentError, UsageError, DomainError, PreconditionError) as exc:
        _error(str(exc))
        raise typer.Exit(2)
    except PostconditionError as exc:
        _error(f"certified bound failed: {exc}")
        raise typer.Exit(1)


def _emit(data: Any, out: Optional[Path] = None) -> None:
    text = data if isinstance(data, str) else dumps(data)
    if out is None:
        typer.echo(text, nl=False)
        return
    out.write_text(text, encoding="utf-8")
    err_console.print(f"written to {out}", style="green", markup=False)


class _Documents:
    """Documents by path, each read once so ``-`` can be referenced twice."""

    def __init__(self) -> None:
        self._cache: Dict[str, Document] = {}

    def load(self, path: str) -> Document:
        if path not in self._cache:
            self._cache[path] = load_document(path, check=False)
        return self._cache[path]

    def resolve(self, ref: str) -> Tuple[Document, Optional[str]]:
        path, sep, name = ref.rpartition("#")
        if not sep:
            return self.load(ref), None
        return self.load(path), name or None

    def value(self, ref: str) -> Any:
        doc, name = self.resolve(ref)
        value = doc.get(name)
        _require_valid(ref, value)
        return value


def _require_valid(label: str, value: Any) -> None:
    report = validate(value)
    if not report.ok:
        for v in report.violations:
            _error(f"{label}: {v!r}")
        raise typer.Exit(1)


def _floats(text: Optional[str]) -> Optional[List[float]]:
    if text is None:
        return None
    try:
        return [parse_ext(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _grid(space: GroundSpace, text: str) -> List[Any]:
    """``0,0.5,1`` on the line, ``a,b`` for labels, ``0,0;1,0`` for points in the plane."""
    if isinstance(space, EuclideanSpace):
        return [_floats(chunk) for chunk in text.split(";") if chunk.strip()]
    if isinstance(space, RealLine):
        return _floats(text) or []
    return [t.strip() for t in text.split(",") if t.strip()]


def _prefix_length(text: str) -> int:
    """``N`` or ``1..N``."""
    lo, sep, hi = text.partition("..")
    try:
        if sep and int(lo) != 1:
            raise UsageError(f"sequence prefixes start at 1, got {text!r}")
        return int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"expected N or 1..N, got {text!r}") from None


def _single_set_document(doc: Document, name: str, value: Any) -> str:
    return dump_document(Document(doc.space, [(name, value)]))


@app.command("validate")
def validate_command(
    path: str = typer.Argument(..., help="Document file, or - for stdin."),
) -> None:
    """Check every set against the representation conditions."""
    with _exit_codes():
        doc = load_document(path, check=False)
        entries = []
        ok = True
        for name, value in doc.items():
            report = validate(value)
            entry: Dict[str, Any] = {"name": name}
            entry.update(report.to_dict())
            if isinstance(value, SendoElement) and report.ok:
                arrow = pfbe_conditions(value)
                entry["arrow_image"] = arrow.is_image
                entry["arrow_conditions"] = arrow.to_dict()
                if not arrow.is_image:
                    entry["note"] = "not an arrow image"
            for v in report.violations:
                _error(f"{name}: {v!r}")
            ok = ok and report.ok
            entries.append(entry)
        _emit({"valid": ok, "sets": entries})
    if not ok:
        raise typer.Exit(1)


@app.command("dist")
def dist_command(
    a: str = typer.Argument(..., help="FILE or FILE#NAME."),
    b: str = typer.Argument(..., help="FILE or FILE#NAME."),
    metric: Metric = typer.Option(Metric.hend, "--metric", "-m"),
    p: float = typer.Option(1.0, "--p", help="Exponent for dp, at least 1."),
) -> None:
    """Distance between two sets with the full inequality-chain self-check."""
    with _exit_codes():
        docs = _Documents()
        u, v = docs.value(a), docs.value(b)
        report = metric_report(u, v, ps=(p,))
        out = report.to_dict()
        out["metric"] = metric.value
        out["p"] = p
        out["value"] = format_ext(report.value(metric.value, p))
        _emit(out)
    if not report.ok:
        _error(f"inequality chain violated: {report.violations}")
        raise typer.Exit(1)


@app.command("classify")
def classify_command(
    ref: str = typer.Argument(..., help="FILE or FILE#NAME."),
) -> None:
    """Discontinuity, platform and failure levels of one set."""
    with _exit_codes():
        u = _Documents().value(ref)
        report = classify_levels(u)
        out: Dict[str, Any] = {k: serialize_levels(v) for k, v in report.as_dict().items()}
        out["chain_holds"] = report.chain_holds()
        if not isinstance(u, BandFuzzySet):
            out["jumps"] = [
                {"level": j.level, "left": format_ext(j.left), "right": format_ext(j.right)}
                for j in level_continuity(u)
            ]
        _emit(out)


def _csv(rows: List[Dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["series", "level", "n", "value"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


@app.command("seq")
def seq_command(
    family: str = typer.Option(..., "--family", "-f", help=f"One of {', '.join(sorted(FAMILIES))}."),
    n: str = typer.Option("20", "--n", help="Prefix length N, or 1..N."),
    limit: Optional[str] = typer.Option(None, "--limit", help="Candidate limit as FILE or FILE#NAME."),
    test: SeqTest = typer.Option(SeqTest.trajectory, "--test", "-t"),
    p: float = typer.Option(1.0, "--p"),
    levels: Optional[str] = typer.Option(None, "--levels", help="Comma-separated test levels."),
    eps: Optional[float] = typer.Option(None, "--eps", help="Resolution for the modulus verdict."),
    resolution: Optional[int] = typer.Option(None, "--resolution", help="Discretization levels."),
    fmt: OutFormat = typer.Option(OutFormat.doc, "--format"),
    out: Optional[Path] = typer.Option(None, "--out", "-o"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Defaults to FUZZY_METRIC_WORKERS."),
) -> None:
    """Diagnostics along a prefix of a named sequence family."""
    failed = False
    with _exit_codes():
        fam = make_family(family, resolution=resolution)
        n_max = _prefix_length(n)
        candidate = _Documents().value(limit) if limit else None
        grid = _floats(levels)
        if test is SeqTest.trajectory:
            result: Any = decomposition_trajectory(fam, candidate, n_max, p, workers)
            failed = bool(result.flags["secf_violations"] or result.flags["chain_violations"])
        elif test is SeqTest.levels:
            result = level_decomposition_test(fam, candidate, grid, n_max, workers)
            failed = bool(result.flags["unexplained"]) and result.flags["h_end"] in ("vanished", "decreasing")
        elif test is SeqTest.gamma:
            result = gamma_residuals(fam, candidate, grid, n_max, workers)
        elif test is SeqTest.modulus:
            result = equi_rc_modulus(fam, n_max, grid, eps)
        elif test is SeqTest.dominated:
            result = dominated_convergence_check(fam, candidate, n_max, p, workers)
            failed = result.consistent is False
        else:
            result = send_characterization(fam, candidate, n_max, p, workers)
            failed = not result.consistent
        if fmt is OutFormat.csv:
            if not isinstance(result, SequenceDiagnostics):
                raise UsageError(f"--format csv needs a trajectory test, not {test.value}")
            _emit(_csv(result.to_rows()), out)
        else:
            _emit(result.to_dict(), out)
    if failed:
        _error(f"{family}: the {test.value} check failed on the prefix")
        raise typer.Exit(1)


@app.command("net")
def net_command(
    path: str = typer.Argument(..., help="Document file, or - for stdin."),
    eps: float = typer.Option(0.1, "--eps"),
    levels: Optional[str] = typer.Option(None, "--levels", help="Comma-separated positive levels."),
    mode: str = typer.Option("end", "--mode", help="end: positive levels; send: the 0-level."),
    collection: Optional[str] = typer.Option(None, "--collection", "-c", help="Defaults to every set."),
) -> None:
    """ε-net certificates for the level unions of a collection."""
    with _exit_codes():
        doc = load_document(path, check=False)
        items = doc.collection(collection)
        for name, value in doc.items():
            if collection is None or name in doc.collections[collection]:
                _require_valid(name, value)
        report = relative_compactness_report(items, _floats(levels), eps, mode)
        _emit(report.to_dict())
    if any(c.verified is False for c in report.total.certificates.values()):
        _error("a net failed independent coverage verification")
        raise typer.Exit(1)


@app.command("project")
def project_command(
    ref: str = typer.Argument(..., help="FILE or FILE#NAME."),
    grid: str = typer.Option(..., "--grid", help="Grid points C_0."),
    eps: float = typer.Option(..., "--eps"),
    out: Optional[Path] = typer.Option(None, "--out", "-o"),
) -> None:
    """Project every cut onto a finite grid within ε."""
    with _exit_codes():
        docs = _Documents()
        doc, name = docs.resolve(ref)
        v = docs.value(ref)
        w = project_to_grid(v, _grid(doc.space, grid), eps)
        _emit(_single_set_document(doc, f"{name or 'set'}_projected", w), out)


@app.command("flatten")
def flatten_command(
    ref: str = typer.Argument(..., help="FILE or FILE#NAME."),
    eps: float = typer.Option(..., "--eps"),
    out: Optional[Path] = typer.Option(None, "--out", "-o"),
) -> None:
    """Replace the levels up to ε by the 0-level."""
    with _exit_codes():
        docs = _Documents()
        doc, name = docs.resolve(ref)
        u = flatten_below(docs.value(ref), eps)
        _emit(_single_set_document(doc, f"{name or 'set'}_flat", u), out)


@app.command("truncate")
def truncate_command(
    ref: str = typer.Argument(..., help="FILE or FILE#NAME."),
    eps: float = typer.Option(..., "--eps"),
    out: Optional[Path] = typer.Option(None, "--out", "-o"),
) -> None:
    """Replace the levels below ε by the ε-cut."""
    with _exit_codes():
        docs = _Documents()
        doc, name = docs.resolve(ref)
        u = truncate_above(docs.value(ref), eps)
        _emit(_single_set_document(doc, f"{name or 'set'}_truncated", u), out)


def _print_table(result: GalleryResult) -> None:
    table = Table(title=f"{result.name}: {result.title}")
    table.add_column("check")
    table.add_column("expected", justify="right")
    table.add_column("computed", justify="right")
    table.add_column("", justify="center")
    for row in result.rows:
        d = row.to_dict()
        table.add_row(
            Text(d["check"]),
            Text(str(d["expected"])),
            Text(str(d["computed"])),
            Text("pass", style="green") if row.passed else Text("FAIL", style="bold red"),
        )
    console.print(table)
    console.print("PASS" if result.passed else "FAIL", style="green" if result.passed else "red")


@app.command("gallery")
def gallery_command(
    name: str = typer.Argument(..., help=f"One of {', '.join(GALLERY)}."),
    n: Optional[int] = typer.Option(None, "--n", help="Prefix length or largest index."),
    p: Optional[float] = typer.Option(None, "--p"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Oracle discretization levels."),
    resolution: Optional[int] = typer.Option(None, "--resolution"),
    fmt: GalleryFormat = typer.Option(GalleryFormat.doc, "--format", help="doc (YAML) or a rich table."),
) -> None:
    """Reproduce a worked example and compare it with its known values."""
    with _exit_codes():
        result = run_gallery(name, n=n, p=p, levels=levels, resolution=resolution)
        if fmt is GalleryFormat.doc:
            _emit(result.to_dict())
        else:
            _print_table(result)
    if not result.passed:
        raise typer.Exit(1)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
