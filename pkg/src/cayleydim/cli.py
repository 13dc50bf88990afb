"""Command-line entry point: ``cayleydim {dim,sweep,mobius,export}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .cayley import build_cayley, parse_connection_set
from .errors import CayleyDimError
from .families import PROOF_CONSISTENT, parse_family
from .graph import Graph, all_pairs_distances
from .graphio import read_graph, to_adjlist, to_dot
from .groups import parse_group
from .metricdim import DEFAULT_CAP, metric_dimension, witness_json
from .verify import (
    VARIANTS,
    mobius_report,
    mobius_to_text,
    records_to_csv,
    records_to_json,
    records_to_text,
    run_sweep,
    sweep_ok,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"error: {name} must be an integer, got {value!r}")


def parse_orders(text: str) -> range:
    """``5..24`` (inclusive) or a single order ``7``."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order range {text!r}; use a..b")
    if start < 2 or stop < start:
        raise argparse.ArgumentTypeError(f"bad order range {text!r}")
    return range(start, stop + 1)


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="group literal, e.g. Z6 or Z2xZ4")
    p.add_argument("--set", dest="conn", help="connection set, e.g. 1,5,3 or (1,0);(0,2)")
    p.add_argument("--family", help="prism:m,n | mobius:N | hypercube:d | cycle:n | complete:n | path:n")
    p.add_argument("--graph", help="DOT or adjacency-list file")
    p.add_argument("--convention", choices=("vertices", "rungs"), default="vertices",
                   help="Mobius ladder indexing (default: vertices)")


def _add_common(p: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
    p.add_argument("--cap", type=int, default=None, help="largest landmark-set size to try")
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=None, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleydim",
        description="Metric dimension of Cayley graphs on finite Abelian groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="exact metric dimension of one graph")
    _add_source(p)
    _add_common(p, ("text", "json"), "text")
    p.add_argument("--representations", action="store_true",
                   help="include the full representation table in JSON output")

    p = sub.add_parser("sweep", help="solve and predict every Cayley graph of the given orders")
    p.add_argument("--orders", type=parse_orders, default=parse_orders("5..24"))
    p.add_argument("--variant", choices=VARIANTS, default=PROOF_CONSISTENT,
                   help="which prediction gates the match column and exit status")
    p.add_argument("--max-size", type=int, default=3,
                   help="largest connection set to enumerate (default 3)")
    _add_common(p, ("csv", "json", "text"), "csv")

    p = sub.add_parser("mobius", help="check the ladder result under both indexing conventions")
    p.add_argument("--params", type=parse_orders, default=parse_orders("8..24"),
                   help="ladder parameters; odd values are skipped")
    _add_common(p, ("text", "json"), "text")

    p = sub.add_parser("export", help="write a graph as DOT or adjacency list")
    _add_source(p)
    p.add_argument("--graph-format", choices=("dot", "adjlist"), default="dot")
    p.add_argument("--out", help="output file (default stdout)")
    return parser


def load_graph(args: argparse.Namespace) -> Graph:
    sources = [s for s in (args.group or args.conn, args.family, args.graph) if s]
    if len(sources) != 1:
        raise CayleyDimError("give exactly one input: --group/--set, --family, or --graph")
    if args.family:
        return parse_family(args.family, args.convention)
    if args.graph:
        return read_graph(args.graph)
    if not (args.group and args.conn):
        raise CayleyDimError("--group and --set must be given together")
    group = parse_group(args.group)
    return build_cayley(group, parse_connection_set(group, args.conn))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_dim(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    dist = all_pairs_distances(graph)
    result = metric_dimension(graph, dist, args.cap)
    if args.format == "json":
        text = json.dumps(witness_json(graph, dist, result, args.representations)) + "\n"
    else:
        text = f"dim {result.display}\n"
        if result.landmarks:
            text += "landmarks " + " ".join(graph.label(w) for w in result.landmarks) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    records = run_sweep(args.orders, cap=args.cap, max_size=args.max_size, jobs=args.jobs)
    writer = {"csv": records_to_csv, "json": records_to_json, "text": records_to_text}[args.format]
    _emit(writer(records, args.variant), args.out)
    return EXIT_OK if sweep_ok(records, args.variant) else EXIT_MISMATCH


def cmd_mobius(args: argparse.Namespace) -> int:
    params = [p for p in args.params if p % 2 == 0]
    report = mobius_report(params, cap=args.cap, jobs=args.jobs)
    if args.format == "json":
        text = json.dumps(report.as_dict(), indent=2) + "\n"
    else:
        text = mobius_to_text(report)
    _emit(text, args.out)
    return EXIT_OK if len(report.consistent_conventions) == 1 else EXIT_MISMATCH


def cmd_export(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    _emit(to_dot(graph) if args.graph_format == "dot" else to_adjlist(graph), args.out)
    return EXIT_OK


COMMANDS = {"dim": cmd_dim, "sweep": cmd_sweep, "mobius": cmd_mobius, "export": cmd_export}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "cap"):
        if args.cap is None:
            args.cap = _env_int("CAYLEYDIM_CAP", DEFAULT_CAP)
        if args.cap < 1:
            print("error: --cap must be >= 1", file=sys.stderr)
            return EXIT_INPUT
    if hasattr(args, "jobs") and args.jobs is None:
        args.jobs = _env_int("CAYLEYDIM_JOBS", 1)
    try:
        return COMMANDS[args.command](args)
    except (CayleyDimError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
