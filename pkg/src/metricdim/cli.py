"""Command-line entry point: ``metricdim {dim,check,construct,verify}``.

Exit codes: 0 success, 1 computational failure (budget exhausted, check or
suite failed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dsl import Construction, SpecError, eval_spec
from .graph import GraphFormatError, is_connected, parse_edge_list, serialize_edge_list
from .harness import SUITES, run_suite
from .resolver import Kind, exact_dimension, is_generator, make_piece

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_target(target: str) -> Construction:
    """An existing file is read as an edge list; anything else is parsed as a spec."""
    if os.path.isfile(target):
        with open(target, encoding="utf-8") as fh:
            text = fh.read()
        try:
            return Construction(parse_edge_list(text))
        except GraphFormatError as exc:
            raise UsageError(f"{target}: {exc}") from None
    try:
        return eval_spec(target)
    except SpecError as exc:
        raise UsageError(f"{target!r}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{target!r}: {exc}") from None


def _landmarks(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--set expects comma-separated vertex ids, got {text!r}") from None


def _cmd_dim(args) -> int:
    target = load_target(args.target)
    g = target.graph
    if not is_connected(g):
        raise UsageError("graph is disconnected")
    kind = Kind.EDGE if args.edge else Kind.VERTEX
    pieces = None
    if args.pieces == "auto" and target.layout is not None:
        layout = target.layout
        pieces = [make_piece(g, layout.copy_vertices(i), kind, budget=args.budget)
                  for i in range(1, layout.k + 1)]
        pieces = [piece for piece in pieces if piece.certified] or None
    result = exact_dimension(g, kind, pieces=pieces, threads=args.threads,
                             deterministic=args.deterministic, budget=args.budget)
    if args.json:
        payload = result.to_dict()
        if args.deterministic:
            payload["millis"] = 0
        print(json.dumps(payload))
    else:
        label = "dim" if kind is Kind.VERTEX else "edim"
        print(f"{label} = {result.dimension} ({result.certificate.value})")
        print("witness: " + " ".join(map(str, result.witness)))
        print(f"nodes: {result.nodes}  sets checked: {result.sets_checked}  "
              f"time: {result.millis:.1f} ms")
    if args.certify and not result.certified:
        print("error: node budget exhausted before the optimum was certified", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_check(args) -> int:
    g = load_target(args.target).graph
    if not is_connected(g):
        raise UsageError("graph is disconnected")
    landmarks = _landmarks(args.set)
    bad = [v for v in landmarks if not 0 <= v < g.n]
    if bad:
        raise UsageError(f"landmarks {bad} are not vertices of a {g.n}-vertex graph")
    kind = Kind.EDGE if args.edge else Kind.VERTEX
    check = is_generator(g, None, landmarks, kind)
    noun = "edge metric generator" if args.edge else "metric generator"
    if check.ok:
        print(f"PASS: {{{', '.join(map(str, landmarks))}}} is a {noun}")
        return EXIT_OK
    a, b = check.pair
    if kind is Kind.EDGE:
        a, b = g.edges[a], g.edges[b]
        print(f"FAIL: edges {a} and {b} have the same distances to the set")
    else:
        print(f"FAIL: vertices {a} and {b} have the same distances to the set")
    return EXIT_FAIL


def _cmd_construct(args) -> int:
    text = serialize_edge_list(load_target(args.spec).graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, extended=args.extended, seed=args.seed, budget=args.budget)
    if args.json:
        docs = [r.to_dict(timing=args.timing) for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
    else:
        for report in reports:
            print(report.table())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metricdim",
                                     description="Exact metric and edge metric dimension.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="compute dim(G) or edim(G)")
    p.add_argument("target", help="edge-list file or construction spec")
    p.add_argument("--edge", action="store_true", help="edge metric dimension")
    p.add_argument("--certify", action="store_true", help="fail unless the optimum is certified")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--budget", type=int, default=None, metavar="NODES")
    p.add_argument("--pieces", choices=("auto", "none"), default="auto")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("check", help="test a landmark set")
    p.add_argument("target")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--edge", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="write a construction as an edge list")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, metavar="NODES")
    p.add_argument("--timing", action="store_true", help="include wall times in JSON rows")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
