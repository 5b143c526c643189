"""Command-line interface.

Exit codes: 0 success or found, 1 proved-none or validation failure,
2 inconclusive (budget exhausted), 64 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

from orthocover import builders, io
from orthocover.builders import PartiteSpec
from orthocover.construct import (
    ConstructionFailed,
    degenerate_swap_colouring,
    double_star_colouring,
    hall_covering,
)
from orthocover.errors import OrthoCoverError, PreconditionError, SearchInconclusive
from orthocover.graph import colouring_violation, covering_violation
from orthocover.search import (
    DEFAULT_BUDGET,
    SearchBudget,
    Status,
    find_independent_covering,
    find_orthogonal_colouring,
    ochi,
)
from orthocover.verify import DEFAULT_SEED, verify_paper

EXIT_OK, EXIT_NONE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64

GEN_KINDS = ("figure1", "G1", "G2", "G3", "double-star", "subdivided-double-star", "rook",
             "nkr", "tree", "degenerate", "fixture")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_budget() -> int:
    raw = os.environ.get("ORTHOCOVER_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ORTHOCOVER_BUDGET must be an integer, got {raw!r}") from None


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs {', '.join(missing)}")


def _load_graph(path: str):
    return io.graph_from_json(io.read_json(path))


def cmd_gen(args: argparse.Namespace) -> int:
    seed = DEFAULT_SEED if args.seed is None else args.seed
    partition = None
    kind = args.kind
    if kind == "figure1":
        g, partition = builders.figure1_graph()
    elif kind in ("G1", "G2", "G3"):
        _, g, partition = next(t for t in builders.three_333_graphs() if t[0] == kind)
    elif kind == "double-star":
        _require(args, "m")
        g = builders.double_star(args.m)
    elif kind == "subdivided-double-star":
        _require(args, "n")
        g = builders.subdivided_double_star(args.n)
    elif kind == "rook":
        _require(args, "n")
        g = builders.rook_graph(args.n)
    elif kind == "nkr":
        _require(args, "parts", "size", "matching")
        g, partition = builders.random_nkk(PartiteSpec(args.parts, args.size, args.matching, seed))
    elif kind == "tree":
        _require(args, "n", "cap")
        g = builders.random_tree(args.n, args.cap, seed)
    elif kind == "degenerate":
        _require(args, "n", "d", "cap")
        g = builders.random_d_degenerate(args.n, args.d, args.cap, seed)
    else:
        _require(args, "name")
        io.write_json(args.out, io.colouring_to_json(builders.named_colouring(args.name)))
        return EXIT_OK
    if kind in ("nkr", "tree", "degenerate"):
        print(f"seed: {seed}", file=sys.stderr)
    io.write_json(args.out, io.graph_to_json(g))
    if partition is not None and args.partition_out:
        io.write_json(args.partition_out, io.partition_to_json(partition))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.colouring:
        c = io.colouring_from_json(io.read_json(args.colouring))
        problem = colouring_violation(g, c)
        what = f"orthogonal colouring with {c.num_colours} colours"
    else:
        if not args.partition:
            raise UsageError("checking a covering needs --partition")
        p = io.partition_from_json(io.read_json(args.partition))
        cov = io.covering_from_json(io.read_json(args.covering))
        problem = covering_violation(g, p, cov)
        what = "independent covering"
    if problem is None:
        print(f"pass: valid {what}")
        return EXIT_OK
    print(f"fail: {problem}")
    return EXIT_NONE


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    budget = SearchBudget(args.budget if args.budget is not None else default_budget())
    if args.problem == "ochi":
        try:
            value, witness = ochi(g, budget)
        except SearchInconclusive as exc:
            print(f"inconclusive: {exc}", file=sys.stderr)
            return EXIT_INCONCLUSIVE
        print(f"ochi = {value} ({budget.used} nodes)", file=sys.stderr)
        io.write_json(args.out, io.colouring_to_json(witness))
        return EXIT_OK
    if args.problem == "colour":
        if args.colours is None:
            raise UsageError("solve colour needs --colours")
        outcome: Any = find_orthogonal_colouring(g, args.colours, budget)
        dump = io.colouring_to_json
    else:
        if not args.partition:
            raise UsageError("solve cover needs --partition")
        p = io.partition_from_json(io.read_json(args.partition))
        outcome = find_independent_covering(g, p, budget)
        dump = io.covering_to_json
    print(f"{outcome.status.value} ({outcome.nodes_used} nodes)", file=sys.stderr)
    if outcome.status is Status.FOUND:
        io.write_json(args.out, dump(outcome.witness))
        return EXIT_OK
    return EXIT_NONE if outcome.status is Status.PROVED_NONE else EXIT_INCONCLUSIVE


def cmd_construct(args: argparse.Namespace) -> int:
    if args.method == "double-star":
        if args.m is None:
            raise UsageError("construct double-star needs --m")
        c = double_star_colouring(args.m)
    elif args.method == "hall":
        if not args.graph or not args.partition:
            raise UsageError("construct hall needs --graph and --partition")
        g = _load_graph(args.graph)
        p = io.partition_from_json(io.read_json(args.partition))
        c, cov = hall_covering(g, p)
        if args.covering_out:
            io.write_json(args.covering_out, io.covering_to_json(cov))
    else:
        if not args.graph:
            raise UsageError("construct degenerate needs --graph")
        c = degenerate_swap_colouring(_load_graph(args.graph), force=args.force)
    io.write_json(args.out, io.colouring_to_json(c))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    c = io.colouring_from_json(io.read_json(args.colouring)) if args.colouring else None
    io.write_text(args.out, io.export_dot(g, c, base=1 if args.one_based else 0))
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    report = verify_paper(budget=budget, seed=args.seed, witness_dir=args.witness_dir,
                          only=args.only)
    sys.stderr.write(report.to_text())
    if args.report:
        io.write_text(args.report, json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orthocover", description="Orthogonal colourings and independent coverings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="emit a named or random graph as JSON")
    gen.add_argument("kind", choices=GEN_KINDS)
    for flag in ("--m", "--n", "--parts", "--size", "--matching", "--cap", "--d", "--seed"):
        gen.add_argument(flag, type=int)
    gen.add_argument("--name", help="fixture name for kind=fixture (G1, G2, G3, D14)")
    gen.add_argument("--out", default="-")
    gen.add_argument("--partition-out")
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser("check", help="validate a colouring or covering")
    check.add_argument("--graph", required=True)
    what = check.add_mutually_exclusive_group(required=True)
    what.add_argument("--colouring")
    what.add_argument("--covering")
    check.add_argument("--partition")
    check.set_defaults(func=cmd_check)

    solve = sub.add_parser("solve", help="exact budgeted search")
    solve.add_argument("problem", choices=("ochi", "colour", "cover"))
    solve.add_argument("--graph", required=True)
    solve.add_argument("--partition")
    solve.add_argument("--colours", type=int)
    solve.add_argument("--budget", type=int)
    solve.add_argument("--out", default="-")
    solve.set_defaults(func=cmd_solve)

    construct = sub.add_parser("construct", help="polynomial-time constructions")
    construct.add_argument("method", choices=("hall", "double-star", "degenerate"))
    construct.add_argument("--graph")
    construct.add_argument("--partition")
    construct.add_argument("--m", type=int)
    construct.add_argument("--force", action="store_true")
    construct.add_argument("--out", default="-")
    construct.add_argument("--covering-out")
    construct.set_defaults(func=cmd_construct)

    dot = sub.add_parser("export-dot", help="write a graph (and colouring) as DOT")
    dot.add_argument("--graph", required=True)
    dot.add_argument("--colouring")
    dot.add_argument("--one-based", action="store_true", help="label colours from 1")
    dot.add_argument("--out", default="-")
    dot.set_defaults(func=cmd_export_dot)

    verify = sub.add_parser("verify-paper", help="re-run every claim and report")
    verify.add_argument("--budget", type=int)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--report", help="write the JSON report here")
    verify.add_argument("--witness-dir")
    verify.add_argument("--only", nargs="+", help="claim ids to run")
    verify.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"orthocover: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ConstructionFailed) as exc:
        print(f"orthocover: {exc}", file=sys.stderr)
        return EXIT_NONE
    except (OrthoCoverError, OSError) as exc:
        print(f"orthocover: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
