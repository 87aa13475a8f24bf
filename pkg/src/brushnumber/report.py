"""Tables, CSV and figures for theorem comparison runs."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Sequence

from brushnumber.verify import TheoremReport

COLUMNS = ("graph", "n", "edges", "br_G", "formula", "exact", "mu_arrow_cost", "matches")


def _row(r: TheoremReport) -> tuple:
    return (r.name, r.n, r.edges, r.brush_number_of_g, r.formula_value, r.exact_value, r.mu_arrow_cost, r.matches)


def summary_line(reports: Sequence[TheoremReport]) -> str:
    hits = sum(r.matches for r in reports)
    return f"{len(reports)} graphs: {hits} match, {len(reports) - hits} mismatch"


def format_table(reports: Sequence[TheoremReport]) -> str:
    rows = [COLUMNS] + [tuple("true" if x is True else "false" if x is False else str(x) for x in _row(r)) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.append(summary_line(reports))
    return "\n".join(lines) + "\n"


def to_csv(reports: Sequence[TheoremReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in reports:
        writer.writerow(["true" if x is True else "false" if x is False else x for x in _row(r)])
    return buf.getvalue()


def plot_reports(reports: Sequence[TheoremReport], path: str | Path) -> Path:
    """Bar chart of closed form vs exact brush number of the Mycielskian, one group per graph."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    names = [r.name or f"g{i}" for i, r in enumerate(reports)]
    xs = range(len(reports))
    width = 0.38
    fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * len(reports) + 1.5), 3.2))
    ax.bar([x - width / 2 for x in xs], [r.formula_value for r in reports], width, label="2 x edges", color="0.7")
    ax.bar(
        [x + width / 2 for x in xs],
        [r.exact_value for r in reports],
        width,
        label="exact br(mu(G))",
        color=["tab:green" if r.matches else "tab:red" for r in reports],
    )
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names)
    ax.set_ylabel("brushes")
    ax.legend(frameon=False, fontsize=8)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    # fixed metadata keeps repeated runs byte-identical
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
