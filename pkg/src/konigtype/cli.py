"""Command line interface.

Subcommands:
  analyze            invariant reports for a graph6 stream (JSON lines or CSV)
  check              single-graph report, human-readable
  verify-conjecture  batch check that connected AT-free graphs are König type
  primes             minimal primes of the binomial edge ideal, as JSON
  emit-script        Macaulay2 cross-check script for one graph
  atfree             asteroidal-triple verdict for one graph
  weakly-closed      weakly-closed ordering search for one graph

Exit codes: 0 clean, 1 counterexample found (verify-conjecture), 2 input
error.
"""

from __future__ import annotations

import csv
import json
import os
import sys

import click

from . import algebra, recognition
from .graphs import BudgetExceeded, Graph6Error, parse_graph6
from .harness import (
    BatchOptions,
    CheckpointError,
    InputError,
    analyze_stream,
    verify_conjecture,
)
from .invariants import CSV_COLUMNS, compute_report

EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2


def _parse_or_exit(graph6: str):
    try:
        return parse_graph6(graph6)
    except Graph6Error as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)


def _print_error(line_no: int, message: str) -> None:
    click.echo(f"warning: skipped line {line_no}: {message}", err=True)


@click.group()
def main():
    """Binomial edge ideals of König type: invariants, recognition and
    exhaustive verification over graph6 streams."""


@main.command()
@click.argument("input", default="-")
@click.option("--filter", "filters", multiple=True,
              type=click.Choice(["connected", "atfree"]),
              help="Drop graphs failing the filter; may repeat.")
@click.option("--jobs", default=1, show_default=True, help="Worker processes.")
@click.option("--format", "fmt", default="json", show_default=True,
              type=click.Choice(["json", "csv"]))
@click.option("--recognition", "with_recognition", is_flag=True,
              help="Add at_free / weakly_closed verdicts to each report.")
@click.option("--strict", is_flag=True, help="Malformed lines are fatal.")
@click.option("--output", "-o", default="-", help="Output file (default stdout).")
@click.option("--figures", default=None, metavar="DIR",
              help="Also render summary figures into DIR.")
def analyze(input, filters, jobs, fmt, with_recognition, strict, output, figures):
    """Invariant reports for every graph in a graph6 stream."""
    opts = BatchOptions(
        source=input,
        filters=tuple(filters),
        with_recognition=with_recognition,
        jobs=jobs,
        output_format="csv" if fmt == "csv" else "jsonl",
        strict=strict,
    )
    out = sys.stdout if output == "-" else open(output, "w", encoding="utf-8")
    records = []
    try:
        stream = analyze_stream(opts, on_error=_print_error)
        if fmt == "csv":
            writer = csv.writer(out)
            writer.writerow(("graph6",) + CSV_COLUMNS)
            for rec in stream:
                if figures:
                    records.append(rec)
                writer.writerow([rec.graph6] + rec.report.to_csv_row())
        else:
            for rec in stream:
                if figures:
                    records.append(rec)
                out.write(json.dumps(
                    {"graph6": rec.graph6, **rec.report.to_json_dict()}
                ) + "\n")
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    finally:
        if out is not sys.stdout:
            out.close()
    if figures:
        from .plots import render_analysis_figures

        for path in render_analysis_figures(records, figures):
            click.echo(f"wrote {path}", err=True)


@main.command()
@click.argument("graph6")
def check(graph6):
    """Full human-readable report for one graph6 string."""
    g = _parse_or_exit(graph6)
    report = compute_report(g)
    at = recognition.find_asteroidal_triple(g)
    try:
        wc = recognition.find_weakly_closed_ordering(g)
        wc_text = f"yes, ordering {list(wc.ordering)}" if wc else "no"
    except BudgetExceeded:
        wc_text = "budget exceeded"
    click.echo(f"graph6:             {graph6}")
    click.echo(f"order / edges:      {report.n} / {report.edge_count}")
    click.echo(f"path cover pi:      {report.path_cover}"
               f"   (cover: {[list(p) for p in report.witness_cover]})")
    click.echo(f"scattering sc:      {report.scattering}")
    click.echo(f"unrestricted sc*:   {report.unrestricted_scattering}"
               f"   (witness set {list(report.witness_set)})")
    click.echo(f"max linear forest:  {report.linear_forest_edges}")
    if report.ideal_height is not None:
        click.echo(f"ideal height:       {report.ideal_height}"
                   f"   (dim R/J = {report.quotient_dim})")
        click.echo(f"unmixed:            {report.unmixed}")
    click.echo(f"König type:         {report.koenig_type}"
               f"   (pi == sc*: {report.path_cover} == {report.unrestricted_scattering})")
    if at is None:
        click.echo("AT-free:            True")
    else:
        click.echo(f"AT-free:            False   (triple {list(at.vertices)})")
    click.echo(f"weakly closed:      {wc_text}")


@main.command("verify-conjecture")
@click.argument("input", default="-")
@click.option("--jobs", default=1, show_default=True)
@click.option("--checkpoint", default=None, metavar="PATH")
@click.option("--strict", is_flag=True)
@click.option("--counterexamples", "cex_path", default=None, metavar="FILE",
              help="Write counterexample records (JSON lines) to FILE.")
@click.option("--figures", default=None, metavar="DIR")
def verify_conjecture_cmd(input, jobs, checkpoint, strict, cex_path, figures):
    """Verify that every connected AT-free graph in the stream has a
    binomial edge ideal of König type. Exits 1 on a counterexample."""
    opts = BatchOptions(
        source=input, jobs=jobs, checkpoint=checkpoint, strict=strict
    )
    try:
        summary = verify_conjecture(opts, on_error=_print_error)
    except (InputError, CheckpointError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    click.echo(summary.to_json())
    click.echo(f"elapsed: {summary.elapsed_seconds:.1f}s", err=True)
    if cex_path:
        with open(cex_path, "w", encoding="utf-8") as fh:
            for cex in summary.counterexamples:
                fh.write(json.dumps(cex) + "\n")
    if figures:
        from .plots import render_verification_figures

        for path in render_verification_figures(summary, figures):
            click.echo(f"wrote {path}", err=True)
    if summary.counterexamples:
        sys.exit(EXIT_COUNTEREXAMPLE)


@main.command()
@click.argument("graph6")
def primes(graph6):
    """Minimal primes of the binomial edge ideal, as JSON."""
    g = _parse_or_exit(graph6)
    try:
        click.echo(algebra.minimal_primes_json(g))
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)


@main.command("emit-script")
@click.argument("graph6")
@click.option("--out-dir", default=None, metavar="DIR",
              help="Write the script into DIR instead of stdout.")
def emit_script(graph6, out_dir):
    """Macaulay2 script cross-checking the combinatorial invariants."""
    g = _parse_or_exit(graph6)
    try:
        text = algebra.emit_algebra_script(g)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    if out_dir is None:
        click.echo(text, nl=False)
    else:
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, algebra.script_filename(g))
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(path)


@main.command()
@click.argument("graph6")
def atfree(graph6):
    """Report whether the graph is AT-free, with a certificate if not."""
    g = _parse_or_exit(graph6)
    at = recognition.find_asteroidal_triple(g)
    if at is None:
        click.echo("AT-free: yes")
    else:
        click.echo("AT-free: no")
        click.echo(json.dumps(at.to_json_dict()))


@main.command("weakly-closed")
@click.argument("graph6")
def weakly_closed(graph6):
    """Search for a weakly closed ordering (cocomparability witness)."""
    g = _parse_or_exit(graph6)
    try:
        wc = recognition.find_weakly_closed_ordering(g)
    except BudgetExceeded as exc:
        click.echo(f"weakly closed: budget-exceeded ({exc})")
        return
    if wc is None:
        click.echo("weakly closed: no")
    else:
        click.echo("weakly closed: yes")
        click.echo(json.dumps({"ordering": list(wc.ordering)}))


if __name__ == "__main__":
    main()
