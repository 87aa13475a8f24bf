"""Command line interface.

Exit codes: 0 success, 1 usage or invalid input, 2 unparsable graph,
3 size cap or search budget exceeded, 4 simulation got stuck.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from brushnumber import __version__, generators
from brushnumber import io as gio
from brushnumber.cleaning import greedy_allocation, parse_allocation, simulate
from brushnumber.errors import InvalidInputError, ParseError, SearchIncomplete, TooLargeError
from brushnumber.graph import Graph, iterated_mycielski
from brushnumber.report import format_table, plot_reports, to_csv
from brushnumber.solver import branch_and_bound, brush_number
from brushnumber.verify import standard_corpus, verify_corpus

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CAP, EXIT_STUCK = 0, 1, 2, 3, 4
GRAPH_SUFFIXES = (".txt", ".edges", ".el", ".col", ".dimacs")

log = logging.getLogger("brushnumber")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load(path: str, fmt: str) -> Graph:
    return gio.parse_graph(_read_text(path), fmt)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _name_of(path: str) -> str:
    return "stdin" if path == "-" else Path(path).stem


# -- subcommands ---------------------------------------------------------


def cmd_exact(args) -> int:
    g = _load(args.input, args.input_format)
    try:
        if args.engine == "bnb" and args.budget is not None:
            result = branch_and_bound(g, args.budget)
        else:
            result = brush_number(g, args.engine, args.cap)
    except SearchIncomplete as exc:
        log.error("%s", exc)
        result = exc.incumbent
        _emit(_exact_output(args, g, result), args.output)
        return EXIT_CAP
    _emit(_exact_output(args, g, result), args.output)
    return EXIT_OK


def _exact_output(args, g: Graph, result) -> str:
    if args.format == "json":
        config = {"subcommand": "exact", "engine": args.engine, "cap": args.cap, "input": args.input}
        record = gio.brush_number_record(_name_of(args.input), g, result)
        return gio.dump_report(gio.make_report([record], config, __version__))
    if args.format == "dot":
        return gio.write_dot(result.witness_orientation, greedy_allocation(result.witness_orientation))
    kind = "brush number" if result.exact else "upper bound"
    arcs = " ".join(f"{t}->{h}" for t, h in result.witness_orientation.arcs)
    return (
        f"{kind} {result.value}\n"
        f"method {result.method}\n"
        f"order {' '.join(map(str, result.witness_order))}\n"
        f"orientation {arcs}\n"
    )


def cmd_mycielski(args) -> int:
    g = _load(args.input, args.input_format)
    mu, history = iterated_mycielski(g, args.k)
    if args.format == "dot":
        text = gio.write_dot(mu, labeling=history[-1], name="mycielski")
    elif args.format == "dimacs":
        text = gio.serialize_dimacs(mu, gio.mycielski_comments(history))
    else:
        text = gio.serialize_edge_list(mu, gio.mycielski_comments(history))
    _emit(text, args.output)
    return EXIT_OK


def _collect_corpus(args) -> dict[str, Graph]:
    corpus: dict[str, Graph] = {}
    if args.standard_corpus:
        corpus.update(standard_corpus())
    for item in args.inputs:
        p = Path(item)
        if item != "-" and p.is_dir():
            files = sorted(f for f in p.iterdir() if f.suffix in GRAPH_SUFFIXES)
        else:
            files = [p]
        for f in files:
            name = _name_of(str(f))
            if name in corpus:
                name = str(f)
            corpus[name] = _load(str(f), args.input_format)
    if not corpus:
        raise UsageError("empty corpus: give graph files, a directory of them, or --standard-corpus")
    return corpus


def cmd_verify(args) -> int:
    corpus = _collect_corpus(args)
    reports = verify_corpus(corpus, args.engine, args.cap)
    if args.format == "json":
        config = {
            "subcommand": "verify",
            "engine": args.engine,
            "cap": args.cap,
            "inputs": list(args.inputs),
            "standard_corpus": args.standard_corpus,
        }
        text = gio.dump_report(gio.make_report([gio.theorem_record(r) for r in reports], config, __version__))
    elif args.format == "csv":
        text = to_csv(reports)
    else:
        text = format_table(reports)
    _emit(text, args.output)
    if args.plot:
        plot_reports(reports, args.plot)
    return EXIT_OK


def cmd_simulate(args) -> int:
    g = _load(args.input, args.input_format)
    alloc = parse_allocation(args.brushes, g)
    if args.policy == "min-index":
        policy = "min-index"
    else:
        try:
            policy = [int(x) for x in args.policy.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--policy must be 'min-index' or a comma-separated vertex order, got {args.policy!r}") from None
    trace = simulate(g, alloc, policy)
    if args.format == "json":
        config = {"subcommand": "simulate", "brushes": args.brushes, "policy": args.policy, "input": args.input}
        record = gio.trace_record(_name_of(args.input), g, trace)
        text = gio.dump_report(gio.make_report([record], config, __version__))
    elif args.format == "dot":
        text = gio.write_dot(g, alloc)
    else:
        text = gio.trace_to_text(trace)
    _emit(text, args.output)
    return EXIT_OK if trace.cleaned else EXIT_STUCK


def cmd_generate(args) -> int:
    params = list(args.params)
    if args.kind == "random":
        params.append(args.seed)
    g = generators.generate(args.kind, *params)
    text = gio.serialize_dimacs(g) if args.format == "dimacs" else gio.serialize_edge_list(g)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brushnumber", description="Brush numbers, graph cleaning and Mycielski graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(p, many: bool = False) -> None:
        if many:
            p.add_argument("inputs", nargs="*", help="graph files or directories ('-' for stdin)")
        else:
            p.add_argument("input", help="graph file, or '-' for stdin")
        p.add_argument("--input-format", choices=["auto", "edgelist", "dimacs"], default="auto")
        p.add_argument("-o", "--output", help="write here instead of stdout")

    def cap_arg(p) -> None:
        p.add_argument("--cap", type=_positive, help="override the engine size cap")

    p = sub.add_parser("exact", help="exact brush number with a witness")
    graph_input(p)
    p.add_argument("--engine", choices=["dp", "brute", "bnb"], default="dp")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--budget", type=_positive, help="node budget for --engine bnb")
    cap_arg(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("mycielski", help="apply the Mycielski construction k times")
    graph_input(p)
    p.add_argument("-k", type=_positive, default=1)
    p.add_argument("--format", choices=["edgelist", "dimacs", "dot"], default="edgelist")
    p.set_defaults(func=cmd_mycielski)

    p = sub.add_parser("verify", help="compare 2*edges with the exact brush number of mu(G)")
    graph_input(p, many=True)
    p.add_argument("--standard-corpus", action="store_true", help="include K2, P3, P4, C3, C4, C5, K4, star4")
    p.add_argument("--engine", choices=["dp", "brute", "bnb"], default="dp")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--plot", metavar="PNG", help="also write a bar chart to this file")
    cap_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="run the cleaning process from an allocation")
    graph_input(p)
    p.add_argument("--brushes", required=True, help='allocation such as "0:2,3:1"')
    p.add_argument("--policy", default="min-index", help="'min-index' or an explicit order like 2,0,1")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("generate", help="emit a graph family member")
    p.add_argument("kind", choices=sorted(generators.GENERATORS))
    p.add_argument("params", nargs="+", help="size n; for random: n p")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)
    return parser


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLargeError as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidInputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
