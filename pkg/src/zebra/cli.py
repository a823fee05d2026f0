"""``zebra`` command line.

Exit codes: 0 success, 1 data or validation error, 2 usage error.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import corpus
from .analysis import MobilityReport, analyze, analyze_counts, compare
from .diagram import build_diagram, render_svg, render_text
from .errors import ParseError, ValidationError, ZebraError
from .model import Mechanism, ValidatedMechanism, validate
from .textfmt import CountsRecord, parse_file
from .xvalidate import EnumerationSpec, MAX_LINKS, MAX_LOOPS, cross_validate


def _fail(message: str) -> None:
    click.echo(message, err=True)
    sys.exit(1)


def _load(path: str) -> ValidatedMechanism | CountsRecord:
    try:
        doc = parse_file(path)
    except FileNotFoundError:
        _fail(f"error: file not found: {path}")
    except OSError as exc:
        _fail(f"error: cannot read {path}: {exc.strerror}")
    except ParseError as exc:
        for issue in exc.issues:
            click.echo(f"{path}:{issue.line}:{issue.col}: {issue.code}: {issue.message}", err=True)
        sys.exit(1)
    if isinstance(doc, CountsRecord):
        return doc
    try:
        return validate(doc)
    except ValidationError as exc:
        for issue in exc.issues:
            click.echo(f"{path}: {issue.code}: {issue.message}", err=True)
        sys.exit(1)


def _report_fields(r: MobilityReport) -> dict:
    c = r.counts
    return {
        "name": r.name,
        "class": r.mclass,
        "B": c.black,
        "G": c.grey,
        "W": c.white,
        "Nw": c.white_between,
        "Ns": c.patches_between,
        "Jf": c.ground_joints,
        "L": r.loops,
        "branch": r.branch.value,
        "M": r.mobility,
    }


@click.group()
def main() -> None:
    """Zebra-crossing mobility analysis of kinematic mechanisms."""


@main.command("analyze")
@click.argument("path")
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain", show_default=True)
def analyze_cmd(path: str, fmt: str) -> None:
    """Print the patch census, loop count and mobility of a .mech file."""
    doc = _load(path)
    try:
        report = analyze_counts(doc) if isinstance(doc, CountsRecord) else analyze(doc)
    except ZebraError as exc:
        _fail(f"{path}: {type(exc).__name__}: {exc}")
    fields = _report_fields(report)
    if fmt == "json":
        fields["overconstrained"] = report.overconstrained
        k = report.kutzbach
        fields["kutzbach"] = None if k is None else {"planar": k.planar, "spatial": k.spatial}
        click.echo(json.dumps(fields, indent=2))
        return
    for key, value in fields.items():
        click.echo(f"{key}={'-' if value is None else value}")


@main.command("render")
@click.argument("path")
@click.option("--format", "fmt", type=click.Choice(["text", "svg"]), default="text", show_default=True)
@click.option("--out", "out", default=None, help="Output file; '-' for stdout. Default <name>.zebra.<ext>.")
def render_cmd(path: str, fmt: str, out: str | None) -> None:
    """Draw the zebra-crossing diagram of a topology .mech file."""
    doc = _load(path)
    if isinstance(doc, CountsRecord):
        _fail(f"{path}: CountsModeNotRenderable: counts documents carry no topology to draw")
    diagram = build_diagram(doc)
    text = render_text(diagram) if fmt == "text" else render_svg(diagram)
    if out == "-":
        click.echo(text, nl=False)
        return
    target = Path(out) if out else Path(f"{doc.name}.zebra.{'txt' if fmt == 'text' else 'svg'}")
    try:
        target.write_text(text, encoding="utf-8")
    except OSError as exc:
        _fail(f"error: cannot write {target}: {exc.strerror}")
    click.echo(str(target))


@main.command("compare")
@click.argument("path")
def compare_cmd(path: str) -> None:
    """Compare zebra mobility with the Kutzbach-Grubler formula."""
    doc = _load(path)
    if isinstance(doc, CountsRecord):
        _fail(f"{path}: compare needs a topology document, not counts")
    try:
        cmp = compare(doc)
    except ZebraError as exc:
        _fail(f"{path}: {type(exc).__name__}: {exc}")
    click.echo(f"name={cmp.name}")
    click.echo(f"zebra_m={cmp.zebra}")
    click.echo(f"kutzbach_planar={cmp.kutzbach.planar}")
    click.echo(f"kutzbach_spatial={cmp.kutzbach.spatial}")
    click.echo(f"baseline={cmp.baseline}")
    click.echo(f"agree={'true' if cmp.agree else 'false'}")


@main.command("corpus-check")
def corpus_check_cmd() -> None:
    """Check every golden corpus entry; exit 0 only if all pass."""
    root = os.environ.get("ZEBRA_CORPUS_DIR") or corpus.CORPUS_DIR
    try:
        report = corpus.check_all(root)
    except (OSError, ValueError) as exc:
        _fail(f"error: cannot load corpus from {root}: {exc}")
    for line in report.lines():
        click.echo(line)
    if not report.ok:
        sys.exit(1)


@main.command("enumerate")
@click.option("--max-links", type=click.IntRange(1, MAX_LINKS), default=6, show_default=True)
@click.option("--min-links", type=click.IntRange(1, MAX_LINKS), default=2, show_default=True)
@click.option("--max-loops", type=click.IntRange(1, MAX_LOOPS), default=2, show_default=True)
@click.option("--single-cycle", is_flag=True, help="Only single-loop chains.")
@click.option("--multi-edges", is_flag=True, help="Allow two joints between the same pair of links.")
def enumerate_cmd(max_links: int, min_links: int, max_loops: int, single_cycle: bool, multi_edges: bool) -> None:
    """Enumerate small planar chains and cross-check zebra against Kutzbach."""
    spec = EnumerationSpec(max_links, min_links, max_loops, single_cycle, multi_edges)
    report = cross_validate(spec)
    for line in report.csv_lines():
        click.echo(line)
    click.echo(report.summary_line())


if __name__ == "__main__":
    main()
