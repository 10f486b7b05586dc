"""Streaming batch engine over graph6 input.

Reads one graph per line, computes invariant reports (optionally with
recognition verdicts), and reproduces the exhaustive verification of the
AT-free conjecture: every connected AT-free graph in the stream must
have a binomial edge ideal of König type.

Work is distributed as an order-preserving parallel map over input
lines; a single sequencer owns output and checkpoint state, so parallel
and sequential runs produce identical results.
"""

from __future__ import annotations

import dataclasses
import gzip
import hashlib
import io
import json
import multiprocessing
import os
import sys
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator, Optional

from .graphs import Graph6Error, is_connected, parse_graph6
from .invariants import (
    InvariantReport,
    _component_count_table,
    compute_report,
    path_cover_number,
    unrestricted_scattering_number,
)
from .recognition import (
    BudgetExceeded,
    find_asteroidal_triple,
    find_weakly_closed_ordering,
    is_at_free,
)

CHECKPOINT_VERSION = 1

VALID_FILTERS = ("connected", "atfree")


class InputError(ValueError):
    """Unreadable or malformed batch input."""


class CheckpointError(RuntimeError):
    """Checkpoint file is corrupt or does not match the input."""


@dataclass(frozen=True)
class BatchOptions:
    """Configuration of one batch run. ``source`` is a file path or "-"
    for standard input (gzip files are detected by magic number)."""

    source: str
    filters: tuple[str, ...] = ()
    with_recognition: bool = False
    jobs: int = 1
    checkpoint: Optional[str] = None
    checkpoint_every: int = 10_000
    output_format: str = "jsonl"
    strict: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("parallelism degree must be >= 1")
        for f in self.filters:
            if f not in VALID_FILTERS:
                raise ValueError(f"unknown filter {f!r}")
        if self.output_format not in ("jsonl", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class ReportRecord:
    line_no: int
    graph6: str
    report: InvariantReport


@dataclass
class VerificationSummary:
    """Aggregate result of a conjecture-verification run.

    ``counterexamples`` lists exactly the connected AT-free graphs whose
    ideal fails to be of König type, with their full reports. Per-order
    subtotals are kept so the cumulative AT-free total can be reconciled
    under different inclusion conventions for small orders.
    """

    graphs_read: int = 0
    graphs_filtered: int = 0
    at_free_count: int = 0
    koenig_count: int = 0
    counterexamples: list = field(default_factory=list)
    read_by_order: dict = field(default_factory=dict)
    connected_by_order: dict = field(default_factory=dict)
    at_free_by_order: dict = field(default_factory=dict)
    koenig_by_order: dict = field(default_factory=dict)
    skipped_lines: int = 0
    elapsed_seconds: float = 0.0

    def to_json_dict(self, include_timing: bool = False) -> dict:
        d = {
            "graphs_read": self.graphs_read,
            "graphs_filtered": self.graphs_filtered,
            "at_free_count": self.at_free_count,
            "koenig_count": self.koenig_count,
            "counterexamples": self.counterexamples,
            "read_by_order": {str(k): v for k, v in sorted(self.read_by_order.items())},
            "connected_by_order": {str(k): v for k, v in sorted(self.connected_by_order.items())},
            "at_free_by_order": {str(k): v for k, v in sorted(self.at_free_by_order.items())},
            "koenig_by_order": {str(k): v for k, v in sorted(self.koenig_by_order.items())},
            "skipped_lines": self.skipped_lines,
        }
        if include_timing:
            d["elapsed_seconds"] = self.elapsed_seconds
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2)


# ---------------------------------------------------------------------------
# Input handling
# ---------------------------------------------------------------------------

def open_graph6_source(source: str) -> io.TextIOBase:
    """Open a graph6 line source; "-" is stdin, gzip is transparent."""
    if source == "-":
        return sys.stdin
    try:
        raw = open(source, "rb")
    except OSError as exc:
        raise InputError(f"cannot open {source}: {exc}") from exc
    magic = raw.read(2)
    raw.seek(0)
    if magic == b"\x1f\x8b":
        return io.TextIOWrapper(gzip.GzipFile(fileobj=raw), encoding="ascii")
    return io.TextIOWrapper(raw, encoding="ascii")


def input_sha256(source: str) -> str:
    h = hashlib.sha256()
    with open(source, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _numbered_lines(fh: Iterable[str], skip: int = 0) -> Iterator[tuple[int, str]]:
    for line_no, line in enumerate(fh, start=1):
        line = line.strip()
        if not line:
            continue
        if line_no <= skip:
            continue
        yield line_no, line


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _analyze_worker(
    task: tuple[int, str],
    filters: tuple[str, ...],
    with_recognition: bool,
) -> tuple[int, str, Optional[InvariantReport], Optional[str]]:
    """Returns (line_no, graph6, report-or-None, error-or-None). A None
    report with no error means the graph was filtered out."""
    line_no, line = task
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return line_no, line, None, str(exc)
    if "connected" in filters and not is_connected(g):
        return line_no, line, None, None
    if "atfree" in filters and not is_at_free(g):
        return line_no, line, None, None
    report = compute_report(g)
    if with_recognition:
        at = find_asteroidal_triple(g)
        try:
            wc = find_weakly_closed_ordering(g)
            wc_state = "yes" if wc is not None else "no"
            wc_order = wc.ordering if wc is not None else None
        except BudgetExceeded:
            wc_state, wc_order = "budget-exceeded", None
        report = dataclasses.replace(
            report,
            at_free=at is None,
            at_certificate=at.to_json_dict() if at is not None else None,
            weakly_closed=wc_state,
            wc_ordering=wc_order,
        )
    return line_no, line, report, None


def _parallel_map(func: Callable, tasks: Iterable, jobs: int) -> Iterator:
    if jobs == 1:
        yield from map(func, tasks)
        return
    with multiprocessing.Pool(processes=jobs) as pool:
        yield from pool.imap(func, tasks, chunksize=64)


def analyze_stream(
    opts: BatchOptions,
    on_error: Optional[Callable[[int, str], None]] = None,
) -> Iterator[ReportRecord]:
    """One report per surviving input graph, in input order.

    Malformed lines are fatal under ``strict``; otherwise they are
    reported through ``on_error`` and skipped. Raises InputError if every
    line was malformed.
    """
    fh = open_graph6_source(opts.source)
    func = partial(
        _analyze_worker,
        filters=opts.filters,
        with_recognition=opts.with_recognition,
    )
    seen = bad = 0
    for line_no, g6, report, error in _parallel_map(
        func, _numbered_lines(fh), opts.jobs
    ):
        seen += 1
        if error is not None:
            bad += 1
            if opts.strict:
                raise InputError(f"line {line_no}: {error}")
            if on_error is not None:
                on_error(line_no, error)
            continue
        if report is not None:
            yield ReportRecord(line_no, g6, report)
    if seen and bad == seen:
        raise InputError("every input line was malformed")


# ---------------------------------------------------------------------------
# verify-conjecture
# ---------------------------------------------------------------------------

def _verify_worker(
    task: tuple[int, str],
) -> tuple[int, str, Optional[str], int, bool, bool, Optional[bool], Optional[InvariantReport]]:
    """Returns (line_no, g6, parse_error, n, connected, at_free, koenig,
    counterexample_report)."""
    line_no, line = task
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return line_no, line, str(exc), 0, False, False, None, None
    if not is_connected(g):
        return line_no, line, None, g.n, False, False, None, None
    if not is_at_free(g):
        return line_no, line, None, g.n, True, False, None, None
    table = _component_count_table(g)
    sc_star, _ = unrestricted_scattering_number(g, table)
    pi, _ = path_cover_number(g)
    if sc_star > pi:
        raise AssertionError(
            f"invariant violation on line {line_no}: sc* = {sc_star} > pi = {pi}"
        )
    koenig = pi == sc_star
    report = None if koenig else compute_report(g)
    return line_no, line, None, g.n, True, True, koenig, report


@dataclass
class _CheckpointState:
    lines_done: int = 0
    summary: VerificationSummary = field(default_factory=VerificationSummary)


def _load_checkpoint(path: str, digest: str) -> _CheckpointState:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    try:
        if data["version"] != CHECKPOINT_VERSION:
            raise CheckpointError(
                f"checkpoint version {data['version']} != {CHECKPOINT_VERSION}"
            )
        if data["input_sha256"] != digest:
            raise CheckpointError("checkpoint input hash does not match input file")
        state = _CheckpointState(lines_done=data["lines_done"])
        s = state.summary
        t = data["summary"]
        s.graphs_read = t["graphs_read"]
        s.graphs_filtered = t["graphs_filtered"]
        s.at_free_count = t["at_free_count"]
        s.koenig_count = t["koenig_count"]
        s.counterexamples = t["counterexamples"]
        s.skipped_lines = t["skipped_lines"]
        for name in ("read_by_order", "connected_by_order", "at_free_by_order", "koenig_by_order"):
            getattr(s, name).update({int(k): v for k, v in t[name].items()})
        return state
    except KeyError as exc:
        raise CheckpointError(f"checkpoint {path} is missing field {exc}") from exc


def _write_checkpoint(path: str, digest: str, state: _CheckpointState) -> None:
    payload = {
        "version": CHECKPOINT_VERSION,
        "input_sha256": digest,
        "lines_done": state.lines_done,
        "summary": state.summary.to_json_dict(),
    }
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)


def verify_conjecture(
    opts: BatchOptions,
    on_error: Optional[Callable[[int, str], None]] = None,
) -> VerificationSummary:
    """Check the AT-free conjecture over a graph6 stream.

    Filters to connected AT-free graphs, decides König type for each and
    accumulates per-order tallies plus any counterexamples. Supports
    checkpoint/resume on file inputs.
    """
    start = time.monotonic()
    state = _CheckpointState()
    digest = None
    if opts.checkpoint is not None:
        if opts.source == "-":
            raise InputError("checkpointing requires a file input, not stdin")
        digest = input_sha256(opts.source)
        if os.path.exists(opts.checkpoint):
            state = _load_checkpoint(opts.checkpoint, digest)
    summary = state.summary

    fh = open_graph6_source(opts.source)
    tasks = _numbered_lines(fh, skip=state.lines_done)
    seen_any = state.lines_done > 0
    for (line_no, g6, err, n, connected, at_free, koenig, report) in _parallel_map(
        _verify_worker, tasks, opts.jobs
    ):
        seen_any = True
        state.lines_done = line_no
        if err is not None:
            if opts.strict:
                raise InputError(f"line {line_no}: {err}")
            if on_error is not None:
                on_error(line_no, err)
            summary.skipped_lines += 1
            continue
        summary.graphs_read += 1
        summary.read_by_order[n] = summary.read_by_order.get(n, 0) + 1
        if not connected:
            continue
        summary.connected_by_order[n] = summary.connected_by_order.get(n, 0) + 1
        if not at_free:
            continue
        summary.graphs_filtered += 1
        summary.at_free_count += 1
        summary.at_free_by_order[n] = summary.at_free_by_order.get(n, 0) + 1
        if koenig:
            summary.koenig_count += 1
            summary.koenig_by_order[n] = summary.koenig_by_order.get(n, 0) + 1
        else:
            summary.counterexamples.append(
                {"graph6": g6, "report": report.to_json_dict()}
            )
        if (
            opts.checkpoint is not None
            and summary.graphs_read % opts.checkpoint_every == 0
        ):
            _write_checkpoint(opts.checkpoint, digest, state)
    if not seen_any:
        raise InputError(f"no graphs in input {opts.source}")
    if opts.checkpoint is not None:
        _write_checkpoint(opts.checkpoint, digest, state)
    summary.elapsed_seconds = time.monotonic() - start
    return summary
