"""Edge-list and DIMACS text formats, DOT export, traces and JSON reports.

Edge list (native, 0-based)::

    # comment
    n 3
    0 1
    1 2

DIMACS (1-based)::

    c comment
    p edge 3 2
    e 1 2
    e 2 3
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Mapping

from brushnumber.cleaning import BrushAllocation, CleaningTrace
from brushnumber.errors import (
    DuplicateProblemLine,
    EdgeCountMismatch,
    GraphValidationError,
    MissingProblemLine,
    ParseError,
    VertexOutOfRange,
)
from brushnumber.graph import Graph, MycielskiLabeling, Orientation
from brushnumber.solver import BrushNumberResult

SCHEMA_VERSION = "1.0"
TOOL_NAME = "brushnumber"


def _check_simple(u: int, v: int, seen: set, lineno: int) -> tuple[int, int]:
    if u == v:
        raise GraphValidationError(f"self-loop ({u}, {v})", (u, v), lineno)
    e = (u, v) if u < v else (v, u)
    if e in seen:
        raise GraphValidationError(f"duplicate edge ({u}, {v})", (u, v), lineno)
    seen.add(e)
    return e


def _ints(tokens: list[str], lineno: int, raw: str) -> list[int]:
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {raw.strip()!r}", lineno) from None
    if any(x < 0 for x in vals):
        raise ParseError(f"negative vertex id in {raw.strip()!r}", lineno)
    return vals


def parse_edge_list(text: str) -> Graph:
    count = None
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if count is not None:
                raise ParseError("repeated 'n' header", lineno)
            if seen:
                raise ParseError("'n' header must precede the edges", lineno)
            if len(tokens) != 2:
                raise ParseError(f"malformed header {line!r}; expected 'n <count>'", lineno)
            (count,) = _ints(tokens[1:], lineno, raw)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex ids, got {line!r}", lineno)
        u, v = _ints(tokens, lineno, raw)
        if count is not None and max(u, v) >= count:
            raise ParseError(f"vertex id {max(u, v)} outside header count {count}", lineno)
        _check_simple(u, v, seen, lineno)
        max_id = max(max_id, u, v)
    return Graph(max_id + 1 if count is None else count, frozenset(seen))


def serialize_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {g.vertex_count}")
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    header = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise DuplicateProblemLine("second 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}; expected 'p edge n m'", lineno)
            header = tuple(_ints(tokens[2:], lineno, raw))
        elif tokens[0] == "e":
            if header is None:
                raise MissingProblemLine("edge before the 'p' line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}; expected 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno, raw)
            n = header[0]
            for x in (u, v):
                if not 1 <= x <= n:
                    raise VertexOutOfRange(f"vertex {x} outside 1..{n}", lineno)
            _check_simple(u - 1, v - 1, seen, lineno)
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if header is None:
        raise MissingProblemLine("no 'p edge n m' line")
    n, m = header
    if len(seen) != m:
        raise EdgeCountMismatch(f"problem line declares {m} edges, found {len(seen)}")
    return Graph(n, frozenset(seen))


def serialize_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """``'dimacs'`` if the first meaningful line is a DIMACS ``p`` or ``c`` line, else ``'edgelist'``."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return "dimacs" if line.split()[0] in ("p", "c", "e") else "edgelist"
    return "edgelist"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def mycielski_comments(history: list[MycielskiLabeling]) -> list[str]:
    out = []
    for k, lab in enumerate(history, 1):
        out.append(f"mycielski round {k}: v = {_span(lab.original)}; x = {_span(lab.shadow)}; w = {lab.root}")
    return out


def _span(ids: tuple[int, ...]) -> str:
    if ids and list(ids) == list(range(ids[0], ids[-1] + 1)):
        return f"{ids[0]}..{ids[-1]}"
    return ",".join(map(str, ids))


def write_dot(
    g: Graph | Orientation,
    brushes: BrushAllocation | Mapping[int, int] | None = None,
    labeling: MycielskiLabeling | None = None,
    name: str = "G",
) -> str:
    """Graphviz text. Orientations become a digraph with ``->`` edges."""
    if isinstance(g, Orientation):
        graph, arcs, kw, op = g.base, list(g.arcs), "digraph", "->"
    else:
        graph, arcs, kw, op = g, list(g.edge_list), "graph", "--"
    counts = brushes.as_dict() if isinstance(brushes, BrushAllocation) else dict(brushes or {})
    lines = [f"{kw} {name} {{"]
    for v in graph.vertices:
        attrs = []
        if labeling is not None or v in counts:
            label = labeling.name(v) if labeling is not None else str(v)
            if v in counts:
                label += f" b={counts[v]}"
            attrs.append(f'label="{label}"')
        if labeling is not None:
            attrs.append(f'group="{labeling.group(v)}"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for t, h in sorted(arcs):
        lines.append(f"  {t} {op} {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_to_text(trace: CleaningTrace) -> str:
    """One line per firing, then an outcome line."""
    lines = [f"initial {' '.join(f'{v}:{c}' for v, c in trace.initial.as_dict().items()) or '-'}"]
    for i, step in enumerate(trace.steps, 1):
        dests = ",".join(map(str, step.destinations)) or "-"
        lines.append(f"step {i} fire {step.vertex} -> {dests}")
    lines.append(f"outcome {trace.outcome}")
    if trace.remaining:
        lines.append("dirty " + " ".join(f"{u}-{v}" for u, v in trace.remaining))
    return "\n".join(lines) + "\n"


# -- JSON report ---------------------------------------------------------


def _edge_pairs(edges) -> list[list[int]]:
    return [[int(a), int(b)] for a, b in edges]


def brush_number_record(name: str, g: Graph, result: BrushNumberResult) -> dict[str, Any]:
    return {
        "kind": "brush_number",
        "graph": {"name": name, "n": g.vertex_count, "edges": g.edge_count},
        "value": result.value,
        "exact": result.exact,
        "method": result.method,
        "witness_order": list(result.witness_order),
        "witness_orientation": _edge_pairs(result.witness_orientation.arcs),
    }


def theorem_record(report) -> dict[str, Any]:
    return {
        "kind": "theorem",
        "graph": {"name": report.name, "n": report.n, "edges": report.edges},
        "formula_value": report.formula_value,
        "exact_value": report.exact_value,
        "matches": report.matches,
        "brush_number_of_g": report.brush_number_of_g,
        "mu_arrow_cost": report.mu_arrow_cost,
        "engine": report.engine,
        "optimal_orientation_of_g": _edge_pairs(report.optimal_orientation_of_g.arcs),
        "exact_witness": list(report.exact_witness),
    }


def trace_record(name: str, g: Graph, trace: CleaningTrace) -> dict[str, Any]:
    return {
        "kind": "trace",
        "graph": {"name": name, "n": g.vertex_count, "edges": g.edge_count},
        "directed": trace.directed,
        "initial": list(trace.initial.counts),
        "total_brushes": trace.initial.total(),
        "outcome": trace.outcome,
        "steps": [
            {
                "vertex": s.vertex,
                "cleaned": _edge_pairs(s.cleaned),
                "destinations": list(s.destinations),
                "brushes_after": list(s.brushes_after),
            }
            for s in trace.steps
        ],
        "remaining": _edge_pairs(trace.remaining),
    }


def make_report(records: list[dict[str, Any]], config: Mapping[str, Any], version: str) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": version},
        "config": dict(config),
        "results": records,
    }


def dump_report(report: Mapping[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


_count = {"type": "integer", "minimum": 0}
_pairs = {"type": "array", "items": {"type": "array", "items": _count, "minItems": 2, "maxItems": 2}}
_graph_summary = {
    "type": "object",
    "required": ["name", "n", "edges"],
    "properties": {"name": {"type": "string"}, "n": _count, "edges": _count},
}

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "brushnumber report",
    "type": "object",
    "required": ["schema_version", "tool", "config", "results"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool": {
            "type": "object",
            "required": ["name", "version"],
            "properties": {"name": {"const": TOOL_NAME}, "version": {"type": "string"}},
        },
        "config": {"type": "object"},
        "results": {
            "type": "array",
            "items": {
                "oneOf": [
                    {
                        "type": "object",
                        "required": ["kind", "graph", "value", "exact", "method", "witness_order", "witness_orientation"],
                        "properties": {
                            "kind": {"const": "brush_number"},
                            "graph": _graph_summary,
                            "value": _count,
                            "exact": {"type": "boolean"},
                            "method": {"enum": ["brute", "dp", "bnb", "greedy"]},
                            "witness_order": {"type": "array", "items": _count},
                            "witness_orientation": _pairs,
                        },
                    },
                    {
                        "type": "object",
                        "required": [
                            "kind", "graph", "formula_value", "exact_value", "matches",
                            "brush_number_of_g", "mu_arrow_cost", "engine",
                            "optimal_orientation_of_g", "exact_witness",
                        ],
                        "properties": {
                            "kind": {"const": "theorem"},
                            "graph": _graph_summary,
                            "formula_value": _count,
                            "exact_value": _count,
                            "matches": {"type": "boolean"},
                            "brush_number_of_g": _count,
                            "mu_arrow_cost": _count,
                            "engine": {"enum": ["brute", "dp", "bnb"]},
                            "optimal_orientation_of_g": _pairs,
                            "exact_witness": {"type": "array", "items": _count},
                        },
                    },
                    {
                        "type": "object",
                        "required": ["kind", "graph", "directed", "initial", "total_brushes", "outcome", "steps", "remaining"],
                        "properties": {
                            "kind": {"const": "trace"},
                            "graph": _graph_summary,
                            "directed": {"type": "boolean"},
                            "initial": {"type": "array", "items": _count},
                            "total_brushes": _count,
                            "outcome": {"enum": ["cleaned", "stuck"]},
                            "steps": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "required": ["vertex", "cleaned", "destinations", "brushes_after"],
                                    "properties": {
                                        "vertex": _count,
                                        "cleaned": _pairs,
                                        "destinations": {"type": "array", "items": _count},
                                        "brushes_after": {"type": "array", "items": _count},
                                    },
                                },
                            },
                            "remaining": _pairs,
                        },
                    },
                ]
            },
        },
    },
}
