from __future__ import annotations

import csv
import io

from brushnumber.report import format_table, plot_reports, summary_line, to_csv
from brushnumber.verify import standard_corpus, verify_corpus


def _reports():
    corpus = standard_corpus()
    return verify_corpus({k: corpus[k] for k in ("K2", "P3", "C4")})


def test_table_layout():
    text = format_table(_reports())
    lines = text.splitlines()
    assert lines[0].split() == ["graph", "n", "edges", "br_G", "formula", "exact", "mu_arrow_cost", "matches"]
    assert lines[2].split() == ["P3", "3", "2", "1", "4", "3", "4", "false"]
    assert lines[-1] == "3 graphs: 1 match, 2 mismatch"


def test_csv_parses_back():
    rows = list(csv.DictReader(io.StringIO(to_csv(_reports()))))
    assert [r["graph"] for r in rows] == ["K2", "P3", "C4"]
    assert [int(r["exact"]) for r in rows] == [2, 3, 6]
    assert [r["matches"] for r in rows] == ["true", "false", "false"]


def test_summary_line_empty():
    assert summary_line([]) == "0 graphs: 0 match, 0 mismatch"


def test_plot_is_reproducible(tmp_path):
    reports = _reports()
    a = plot_reports(reports, tmp_path / "a.png").read_bytes()
    b = plot_reports(reports, tmp_path / "b.png").read_bytes()
    assert a[:8] == b"\x89PNG\r\n\x1a\n"
    assert a == b
