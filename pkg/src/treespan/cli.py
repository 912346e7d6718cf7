"""``tree-span`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Sequence, TextIO

import numpy as np

from .bench import run_bench
from .generators import ENUMERATE_CAP, enumerate_trees, random_tree
from .graph_core import GraphError, format_edge_list, parse_edge_list, validate_tree
from .oracle import product_span_oracle
from .tree_span import InvariantViolation, strong_edge_span, strong_vertex_span
from .witness import WalkPair, build_witness, verify_walk_pair

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

COMMANDS = ("span", "edge-span", "witness", "verify", "oracle", "gen", "enumerate", "bench")


class InputError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _read_tree(path: str | None):
    return validate_tree(parse_edge_list(_read(path)))


def _emit_json(out: TextIO, obj) -> None:
    out.write(json.dumps(obj) + "\n")


def cmd_span(args, out: TextIO) -> int:
    tree = _read_tree(args.input)
    solve = strong_edge_span if args.command == "edge-span" else strong_vertex_span
    result = solve(tree)
    if args.json:
        _emit_json(out, result.to_dict())
    else:
        out.write(f"span: {result.span}\n")
        out.write(f"kind: {result.kind}\n")
        out.write(f"witness_vertex: {'-' if result.witness_vertex is None else result.witness_vertex}\n")
        out.write(f"eta: {result.eta}\n")
        out.write(f"radius: {result.radius}\n")
    return EXIT_OK


def cmd_witness(args, out: TextIO) -> int:
    tree = _read_tree(args.input)
    walks, claimed = build_witness(tree)
    report = verify_walk_pair(tree, walks, claimed)
    if not report.passed:
        raise InvariantViolation(f"constructed witness failed verification: {report.first_violation}")
    out.write(walks.to_json(claimed) + "\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.walk is None:
        raise InputError("verify needs --walk FILE with the walk JSON")
    graph = parse_edge_list(_read(args.input))
    try:
        walks, claimed = WalkPair.from_json(_read(args.walk))
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise InputError(f"malformed walk JSON: {exc}") from exc
    try:
        report = verify_walk_pair(graph, walks, claimed)
    except IndexError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        _emit_json(out, {**asdict(report), "passed": report.passed})
    else:
        out.write(f"result: {'pass' if report.passed else 'fail'}\n")
        out.write(f"valid A/B: {report.valid_a}/{report.valid_b}\n")
        out.write(f"surjective A/B: {report.surjective_a}/{report.surjective_b}\n")
        out.write(f"min_distance: {report.min_distance} (claimed {report.claimed})\n")
        if report.first_violation:
            step, reason = report.first_violation
            out.write(f"first violation at step {step}: {reason}\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args, out: TextIO) -> int:
    graph = parse_edge_list(_read(args.input))
    value = product_span_oracle(graph)
    if args.json:
        _emit_json(out, {"span": value})
    else:
        out.write(f"span: {value}\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    if args.n is None or args.n < 1:
        raise InputError("gen needs --n N with N >= 1")
    tree = random_tree(args.n, np.random.default_rng(args.seed))
    if args.json:
        _emit_json(out, {"n": tree.n, "edges": tree.graph.edges().tolist()})
    else:
        out.write(format_edge_list(tree))
    return EXIT_OK


def cmd_enumerate(args, out: TextIO) -> int:
    if args.n is None or not 1 <= args.n <= ENUMERATE_CAP:
        raise InputError(f"enumerate needs --n N with 1 <= N <= {ENUMERATE_CAP}")
    for i, tree in enumerate(enumerate_trees(args.n)):
        if args.json:
            _emit_json(out, {"n": tree.n, "edges": tree.graph.edges().tolist()})
        else:
            out.write(f"# tree {i}\n{format_edge_list(tree)}\n")
    return EXIT_OK


def cmd_bench(args, out: TextIO) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError as exc:
        raise InputError(f"bad --sizes: {args.sizes}") from exc
    if not sizes or sizes != sorted(sizes) or min(sizes) < 1:
        raise InputError("--sizes must be ascending positive integers")
    rows = run_bench(sizes, trials=args.trials, seed=args.seed)
    if args.json:
        _emit_json(out, [asdict(r) for r in rows])
        return EXIT_OK
    out.write(f"{'n':>10}  {'median_s':>10}  {'ratio':>6}\n")
    for r in rows:
        ratio = "-" if r.ratio is None else f"{r.ratio:.2f}"
        out.write(f"{r.n:>10}  {r.median_seconds:>10.4f}  {ratio:>6}\n")
    return EXIT_OK


HANDLERS = {
    "span": cmd_span,
    "edge-span": cmd_span,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "enumerate": cmd_enumerate,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tree-span",
        description="Strong vertex/edge span of trees, witnesses and brute-force checks.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="edge-list file (default: stdin)")
    parser.add_argument("--walk", help="walk JSON file for verify")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--n", type=int)
    parser.add_argument("--sizes", default="250000,500000,1000000")
    parser.add_argument("--trials", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args, out)
    except (GraphError, InputError) as exc:
        print(f"tree-span: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"tree-span: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
