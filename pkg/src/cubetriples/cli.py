"""Command-line front end: solve, oracle, trace, and scan subcommands.

All integer flags accept values of any magnitude; exit code 0 means the
command ran (an empty solution set is an answer, not an error), 2 is a
usage error, 1 a runtime failure such as an unwritable output path.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .oracle import brute_force
from .scan import record_to_json, scan_grid
from .solver import SolutionSet, TripleSystem, solve
from .trace import derive_trace, format_triple, format_solution_set, render

__all__ = ["build_parser", "main", "run"]


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        return (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an inclusive range A:B, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubetriples",
        description="Exact integer solutions of X + Y + Z = s, X^3 + Y^3 + Z^3 = c.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one system exactly")
    p_solve.add_argument("--sum", type=int, required=True, help="target of X + Y + Z")
    p_solve.add_argument("--cubes", type=int, required=True, help="target of X^3 + Y^3 + Z^3")
    p_solve.add_argument("--format", choices=("text", "json"), default="text")

    p_oracle = sub.add_parser("oracle", help="brute-force search inside a box")
    p_oracle.add_argument("--sum", type=int, required=True)
    p_oracle.add_argument("--cubes", type=int, required=True)
    p_oracle.add_argument("--bound", type=int, required=True, help="box radius max(|x|,|y|,|z|)")
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")

    p_trace = sub.add_parser("trace", help="print the derivation step by step")
    p_trace.add_argument("--sum", type=int, required=True)
    p_trace.add_argument("--cubes", type=int, required=True)
    p_trace.add_argument("--format", choices=("plain", "markdown", "json"), default="plain")

    p_scan = sub.add_parser("scan", help="classify every system on an (s, c) grid")
    p_scan.add_argument("--sum-range", type=_parse_range, required=True, metavar="A:B")
    p_scan.add_argument("--cubes-range", type=_parse_range, required=True, metavar="A:B")
    p_scan.add_argument("--out", required=True, help="output file, one record per line")
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--include-solutions", action="store_true")
    # let values like -2:2 pass as arguments rather than option flags
    p_scan._negative_number_matcher = re.compile(r"^-\d+(:-?\d+)?$")

    return parser


def _print_finite(solution_set: SolutionSet, format: str) -> None:
    if format == "json":
        print(json.dumps(solution_set.to_json_dict()))
        return
    assert solution_set.triples is not None
    if not solution_set.triples:
        print("no solutions")
        return
    for triple in solution_set.triples:
        print(format_triple(triple))


def cmd_solve(args: argparse.Namespace) -> int:
    result = solve(TripleSystem(args.sum, args.cubes))
    if result.kind == "infinite_family":
        if args.format == "json":
            print(json.dumps(result.to_json_dict()))
        else:
            print(format_solution_set(result))
        return 0
    _print_finite(result, args.format)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    triples = brute_force(TripleSystem(args.sum, args.cubes), args.bound)
    _print_finite(SolutionSet.finite(tuple(triples)), args.format)
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    trace = derive_trace(TripleSystem(args.sum, args.cubes))
    format = "structured-records" if args.format == "json" else args.format
    sys.stdout.write(render(trace, format))
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    s_range = args.sum_range
    c_range = args.cubes_range
    counts = {"finite": 0, "empty": 0, "infinite_family": 0}
    try:
        sink = open(args.out, "w", encoding="utf-8")
    except OSError as exc:
        print(f"cannot open output file: {exc}", file=sys.stderr)
        return 1
    with sink:
        for record in scan_grid(
            s_range, c_range, workers=args.jobs, include_solutions=args.include_solutions
        ):
            if record.kind == "infinite_family":
                counts["infinite_family"] += 1
            elif record.solution_count == 0:
                counts["empty"] += 1
            else:
                counts["finite"] += 1
            sink.write(record_to_json(record) + "\n")
    total = sum(counts.values())
    print(
        f"{total} systems: {counts['finite']} finite, {counts['empty']} empty, "
        f"{counts['infinite_family']} infinite-family"
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.bound < 0:
        parser.error("--bound must be nonnegative")
    if args.command == "scan":
        if args.jobs < 1:
            parser.error("--jobs must be >= 1")
        for name, (lo, hi) in (("--sum-range", args.sum_range), ("--cubes-range", args.cubes_range)):
            if lo > hi:
                parser.error(f"{name} is empty: {lo}:{hi}")
    handler = {
        "solve": cmd_solve,
        "oracle": cmd_oracle,
        "trace": cmd_trace,
        "scan": cmd_scan,
    }[args.command]
    return handler(args)


def run() -> None:
    sys.exit(main())
