"""Typer CLI interface for rank-maps."""

from __future__ import annotations

import logging
import os
from enum import Enum
from pathlib import Path
from typing import Callable, List, Optional

import typer

from .convert import InvalidRepresentationError
from .io import write_output
from .pipeline import InputError, read_source, render, run_check, run_convert, run_enumerate, run_validate

logging.basicConfig(
    level=os.getenv("RANK_MAPS_LOG_LEVEL", "WARNING").upper(),
    format="[%(levelname)s] %(name)s: %(message)s",
)

LOGGER = logging.getLogger(__name__)

app = typer.Typer(help="Convert ties-permitted rankings between ordered partitions, preference maps and C-S vectors")


class TargetChoice(str, Enum):
    ranking = "ranking"
    pm = "pm"
    cs = "cs"


class KindChoice(str, Enum):
    ranking = "ranking"
    pm = "pm"
    cs = "cs"


class FormatChoice(str, Enum):
    text = "text"
    json = "json"


SOURCE_ARGUMENT = typer.Argument(None, help="Ranking expression or JSON document; stdin when omitted")
FILE_OPTION = typer.Option(None, "--file", "-f", help="Read input from a batch or JSON file")
KIND_OPTION = typer.Option(None, "--kind", "-k", help="Force the input kind instead of detecting it")
LABELS_OPTION = typer.Option(None, "--labels", help="Comma-separated roster for PM and C-S input")
OUT_OPTION = typer.Option(None, "--out", "-o", help="Write output to this file instead of stdout")
ALLOW_LARGE_OPTION = typer.Option(False, "--allow-large", help="Lift the enumeration size guard")


def _roster(labels: Optional[str]) -> Optional[List[str]]:
    if labels is None:
        return None
    return [label.strip() for label in labels.split(",") if label.strip()]


def _run(action: Callable[[], int]) -> None:
    """Run a command body and translate failures into exit codes."""

    try:
        code = action()
    except InputError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(code=exc.exit_code) from exc
    except Exception as exc:  # pylint: disable=broad-except
        LOGGER.exception("Command failed")
        raise typer.Exit(code=1) from exc
    if code:
        raise typer.Exit(code=code)


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr")) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.INFO)


@app.command("convert")
def cmd_convert(
    source: Optional[str] = SOURCE_ARGUMENT,
    to: TargetChoice = typer.Option(..., "--to", help="Target representation"),
    file: Optional[Path] = FILE_OPTION,
    kind: Optional[KindChoice] = KIND_OPTION,
    labels: Optional[str] = LABELS_OPTION,
    output_format: FormatChoice = typer.Option(FormatChoice.json, "--format", help="Output format"),
    out: Optional[Path] = OUT_OPTION,
):
    """Convert rankings, preference maps or C-S vectors to another representation."""

    def action() -> int:
        text = read_source(source, file)
        try:
            output = run_convert(text, to.value, kind.value if kind else None, _roster(labels), output_format.value)
        except InvalidRepresentationError as exc:
            write_output(render([exc.report], output_format.value))
            return 1
        write_output(output, out)
        return 0

    _run(action)


@app.command("validate")
def cmd_validate(
    source: Optional[str] = SOURCE_ARGUMENT,
    file: Optional[Path] = FILE_OPTION,
    kind: Optional[KindChoice] = KIND_OPTION,
    labels: Optional[str] = LABELS_OPTION,
    output_format: FormatChoice = typer.Option(FormatChoice.text, "--format", help="Output format"),
    out: Optional[Path] = OUT_OPTION,
):
    """Check whether inputs are valid preference maps or C-S vectors."""

    def action() -> int:
        text = read_source(source, file)
        output, valid = run_validate(text, kind.value if kind else None, _roster(labels), output_format.value)
        write_output(output, out)
        return 0 if valid else 1

    _run(action)


@app.command("check")
def cmd_check(
    n: int = typer.Option(..., "--n", "-n", help="Number of alternatives"),
    allow_large: bool = ALLOW_LARGE_OPTION,
    output_format: FormatChoice = typer.Option(FormatChoice.text, "--format", help="Output format"),
    out: Optional[Path] = OUT_OPTION,
):
    """Verify every conversion law over all weak orders on N alternatives."""

    def action() -> int:
        output, report = run_check(n, allow_large, output_format.value)
        write_output(output, out)
        return 0 if report.ok else 1

    _run(action)


@app.command("enumerate")
def cmd_enumerate(
    n: int = typer.Option(..., "--n", "-n", help="Number of alternatives"),
    allow_large: bool = ALLOW_LARGE_OPTION,
    output_format: FormatChoice = typer.Option(FormatChoice.text, "--format", help="Output format"),
    out: Optional[Path] = OUT_OPTION,
):
    """List every weak order on N alternatives."""

    def action() -> int:
        write_output(run_enumerate(n, allow_large, output_format.value), out)
        return 0

    _run(action)


if __name__ == "__main__":
    app()
