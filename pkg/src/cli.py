# File: src/cli.py
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional

import typer
from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from src.config import settings
from src.elnitsky.errors import ElnitskyError
from src.elnitsky.forced import forced_tiles, perimeter_labels, tile_frequency
from src.elnitsky.optimal import catalan, enumerate_max_forced, phi, phi_inverse
from src.elnitsky.perm import Permutation, ValuePair, format_permutation, parse_permutation
from src.elnitsky.tiling import PerimeterType, tilings
from src.qa.report_generator import generate_markdown_report
from src.qa.theorem_runner import new_run_logger, theorem_parameter, verify_theorem
from src.render.svg import RenderOptions, render_tiling, write_svg
from src.schemas import (
    OptimalPayload,
    PhiPayload,
    TilingsPayload,
    forced_payload,
    freq_payload,
    tiling_payload,
)

app = typer.Typer(help="Rhombic tilings of Elnitsky polygons and their forced perimeter tiles")
console = Console()
err_console = Console(stderr=True)

TYPE_CHOICES = ["all"] + [kind.value for kind in PerimeterType]


@app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr."),
) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _emit(payload: Dict[str, Any]) -> None:
    typer.echo(json.dumps(payload, indent=2))


def _fail(exc: ElnitskyError) -> NoReturn:
    typer.echo(json.dumps({"error": exc.to_dict()}), err=True)
    raise typer.Exit(code=1)


def _permutation(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except ElnitskyError as exc:
        _fail(exc)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="PERMUTATION") from exc


def _tile(text: str) -> ValuePair:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(part.isdigit() for part in parts) or parts[0] == parts[1]:
        raise typer.BadParameter(f"Expected two distinct values 'x,y', got {text!r}.", param_hint="--tile")
    try:
        return ValuePair.of(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="--tile") from exc


def _kinds(value: str) -> List[PerimeterType]:
    if value == "all":
        return list(PerimeterType)
    try:
        return [PerimeterType(value)]
    except ValueError as exc:
        raise typer.BadParameter(f"Choose one of {', '.join(TYPE_CHOICES)}.", param_hint="--type") from exc


def _pairs(labels) -> str:
    return " ".join(str(label) for label in sorted(labels)) or "-"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


@app.command("tilings")
def tilings_command(
    permutation: str = typer.Argument(..., help="One-line notation: 34251 or 3,4,2,5,1."),
    count_only: bool = typer.Option(False, "--count/--list", help="Only count the tilings."),
    as_table: bool = typer.Option(False, "--table/--json", help="Rich table instead of JSON."),
    max_tilings: Optional[int] = typer.Option(None, "--max-tilings", min=1, help="Enumeration cap."),
) -> None:
    """Enumerate the rhombic tilings of X(w)."""
    w = _permutation(permutation)
    try:
        found = tilings(w, max_tilings)
    except ElnitskyError as exc:
        _fail(exc)

    if as_table:
        table = Table(title=f"Tilings of {format_permutation(w)}: {len(found)}", box=box.SIMPLE_HEAVY)
        table.add_column("#", justify="right")
        table.add_column("Canonical word")
        table.add_column("Right perimeter")
        table.add_column("Left perimeter")
        for index, t in enumerate(found):
            labels = perimeter_labels(t)
            table.add_row(
                str(index),
                " ".join(map(str, t.word)) or "-",
                _pairs(labels[PerimeterType.RIGHT]),
                _pairs(labels[PerimeterType.LEFT]),
            )
        console.print(table)
        return

    payload = TilingsPayload(
        permutation=list(w.entries),
        tiling_count=len(found),
        tilings=None if count_only else [tiling_payload(i, t, perimeter_labels(t)) for i, t in enumerate(found)],
    )
    _emit(payload.model_dump(mode="json", exclude_none=True))


@app.command("forced")
def forced_command(
    permutation: str = typer.Argument(..., help="One-line notation."),
    kind: str = typer.Option("all", "--type", help="left, right, top, bottom or all."),
    as_table: bool = typer.Option(False, "--table/--json", help="Rich table instead of JSON."),
    max_tilings: Optional[int] = typer.Option(None, "--max-tilings", min=1, help="Enumeration cap."),
) -> None:
    """Forced perimeter tiles and the frequency of every perimeter tile."""
    w = _permutation(permutation)
    kinds = _kinds(kind)
    try:
        report = forced_tiles(w, max_tilings)
    except ElnitskyError as exc:
        _fail(exc)

    if as_table:
        table = Table(
            title=f"Forced tiles of {format_permutation(w)} over {report.tiling_count} tilings",
            box=box.MINIMAL_HEAVY_HEAD,
        )
        table.add_column("Type")
        table.add_column("Forced", style="green")
        table.add_column("Frequencies")
        for item in kinds:
            freqs = ", ".join(f"{label} {value}" for label, value in sorted(report.frequencies[item].items()))
            table.add_row(item.value, _pairs(report.forced[item]), freqs or "-")
        console.print(table)
        return

    _emit(forced_payload(report, kinds).model_dump(mode="json"))


@app.command("freq")
def freq_command(
    permutation: str = typer.Argument(..., help="One-line notation."),
    tile: str = typer.Option(..., "--tile", help="Tile label x,y."),
    kind: str = typer.Option(..., "--type", help="left, right, top or bottom."),
) -> None:
    """Proportion of tilings in which a tile is a perimeter tile of a type."""
    w = _permutation(permutation)
    label = _tile(tile)
    if kind == "all":
        raise typer.BadParameter("Pick a single perimeter type.", param_hint="--type")
    (item,) = _kinds(kind)
    try:
        value = tile_frequency(w, label, item)
    except ElnitskyError as exc:
        _fail(exc)
    _emit(freq_payload(w, label, item, value).model_dump(mode="json"))


@app.command("verify")
def verify_command(
    theorem: str = typer.Argument(..., help="Claim name, e.g. force-right."),
    n: Optional[int] = typer.Option(None, "--n", min=1, help="Permutation size for n-claims."),
    m: Optional[int] = typer.Option(None, "--m", min=1, help="Half-size for m-claims."),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write a Markdown report here."),
    log: bool = typer.Option(False, "--log", help="Record a JSONL run log under the log directory."),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Worker processes."),
) -> None:
    """Check a claim exhaustively; exits 1 when a counterexample exists."""
    try:
        parameter = theorem_parameter(theorem)
    except ElnitskyError as exc:
        _fail(exc)
    given = {"n": n, "m": m}
    other = "m" if parameter == "n" else "n"
    if given[other] is not None or given[parameter] is None:
        raise typer.BadParameter(f"'{theorem}' takes --{parameter} only.", param_hint=f"--{parameter}")

    run_logger = new_run_logger(theorem) if log else None
    try:
        report = verify_theorem(theorem, given[parameter], workers=workers, run_logger=run_logger)
    except ElnitskyError as exc:
        _fail(exc)
    finally:
        if run_logger:
            run_logger.close()

    if report_path:
        generate_markdown_report(report, report_path, run_logger.log_path if run_logger else None)
        err_console.print(f"Report saved to: {report_path}")
    if run_logger:
        err_console.print(f"Run log: {run_logger.log_path}")
    _emit(report.payload())
    if not report.passed:
        raise typer.Exit(code=1)


@app.command("optimal")
def optimal_command(
    m: int = typer.Option(..., "--m", min=1, help="Half-size: permutations of size 2m."),
    list_all: bool = typer.Option(False, "--list", help="List the permutations."),
) -> None:
    """Permutations with m forced right-perimeter tiles."""
    try:
        found = enumerate_max_forced(m, settings.max_optimal)
    except ElnitskyError as exc:
        _fail(exc)
    payload = OptimalPayload(
        m=m,
        count=len(found),
        catalan=catalan(m - 1),
        permutations=[list(w.entries) for w in found] if list_all else None,
    )
    _emit(payload.model_dump(mode="json", exclude_none=True))


@app.command("phi")
def phi_command(
    permutation: str = typer.Argument(..., help="One-line notation."),
    inverse: bool = typer.Option(False, "--inverse", help="Apply the inverse map."),
) -> None:
    """Grow an alternating 321-avoiding permutation by two, or shrink it back."""
    v = _permutation(permutation)
    try:
        image = phi_inverse(v) if inverse else phi(v)
    except ElnitskyError as exc:
        _fail(exc)
    _emit(PhiPayload(input=list(v.entries), output=list(image.entries), inverse=inverse).model_dump(mode="json"))


@app.command("render")
def render_command(
    permutation: str = typer.Argument(..., help="One-line notation."),
    out: Path = typer.Option(..., "--out", help="SVG path; with --all, the stem of each file."),
    index: int = typer.Option(0, "--tiling", min=0, help="Tiling index in canonical-word order."),
    render_all: bool = typer.Option(False, "--all", help="Render every tiling."),
    shade_forced: bool = typer.Option(False, "--shade-forced", help="Shade forced perimeter tiles."),
    integer_geometry: bool = typer.Option(False, "--integer-geometry", help="Use the exact integer embedding."),
    scale: float = typer.Option(40.0, "--scale", help="Pixels per unit."),
) -> None:
    """Draw tilings as SVG."""
    w = _permutation(permutation)
    try:
        opts = RenderOptions(equilateral=not integer_geometry, shade_forced=shade_forced, scale=scale, output_path=out)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="--scale") from exc

    try:
        found = tilings(w)
        if render_all:
            targets = [(t, out.with_name(f"{out.stem}_{i}{out.suffix or '.svg'}")) for i, t in enumerate(found)]
        else:
            if index >= len(found):
                raise typer.BadParameter(f"{format_permutation(w)} has {len(found)} tilings.", param_hint="--tiling")
            targets = [(found[index], out)]
        written = [str(write_svg(render_tiling(t, opts), path)) for t, path in targets]
    except ElnitskyError as exc:
        _fail(exc)
    _emit({"permutation": list(w.entries), "written": written})


def main() -> None:
    app()


if __name__ == "__main__":
    main()
