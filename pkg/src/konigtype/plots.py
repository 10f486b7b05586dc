"""Figure rendering for batch reports.

Figures are written as PNG files next to the delimited output: per-order
count bars for conjecture-verification runs, and invariant distributions
for plain analysis runs.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .harness import ReportRecord, VerificationSummary


def render_verification_figures(summary: VerificationSummary, out_dir: str) -> list[str]:
    """Bar chart of per-order subtotals (read / connected / AT-free /
    König among AT-free). Returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    orders = sorted(
        set(summary.read_by_order) | set(summary.at_free_by_order)
    )
    series = [
        ("graphs read", summary.read_by_order, "#9aa5b1"),
        ("connected", summary.connected_by_order, "#5b8bd0"),
        ("AT-free", summary.at_free_by_order, "#e0913d"),
        ("König (AT-free)", summary.koenig_by_order, "#4aa564"),
    ]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.8 / len(series)
    for k, (label, data, color) in enumerate(series):
        xs = [i + (k - 1.5) * width for i in range(len(orders))]
        ax.bar(xs, [data.get(n, 0) for n in orders], width=width,
               label=label, color=color)
    ax.set_yscale("symlog")
    ax.set_xticks(range(len(orders)))
    ax.set_xticklabels([str(n) for n in orders])
    ax.set_xlabel("graph order n")
    ax.set_ylabel("count")
    ax.set_title("Conjecture verification: per-order subtotals")
    ax.legend(frameon=False)
    fig.tight_layout()
    path = os.path.join(out_dir, "verification_counts.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def render_analysis_figures(records: Iterable[ReportRecord], out_dir: str) -> list[str]:
    """Histogram of the path cover number against the unrestricted
    scattering number over the analysed stream."""
    os.makedirs(out_dir, exist_ok=True)
    pairs = Counter(
        (r.report.path_cover, r.report.unrestricted_scattering) for r in records
    )
    fig, ax = plt.subplots(figsize=(5.5, 5))
    if pairs:
        xs, ys, cs = zip(*((pi, sc, c) for (pi, sc), c in sorted(pairs.items())))
        sc_plot = ax.scatter(xs, ys, s=[20 + 8 * c for c in cs], c=cs, cmap="viridis")
        fig.colorbar(sc_plot, ax=ax, label="graphs")
        hi = max(max(xs), max(ys)) + 1
        ax.plot([0, hi], [0, hi], ls="--", c="grey", lw=1, label="π = sc* (König)")
        ax.legend(frameon=False)
    ax.set_xlabel("path cover number π")
    ax.set_ylabel("unrestricted scattering sc*")
    ax.set_title("π vs sc* over the stream")
    fig.tight_layout()
    path = os.path.join(out_dir, "pi_vs_scstar.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]
