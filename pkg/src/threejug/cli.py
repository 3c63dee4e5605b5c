"""Command-line front end: ``threejug solve|check|graph|verify``."""
from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import formats
from .core import JugError, PuzzleInstance, Quadruple, validate_quadruple
from .formats import InputError
from .model import build_graph
from .solver import shortest_path
from .verify import classic_quadruples, gcd_crosscheck, iter_quadruples, sweep_theorem1

EXIT_SOLVABLE = 0
EXIT_UNSOLVABLE = 1
EXIT_INPUT_ERROR = 2


def _contents(q: Quadruple, v) -> str:
    level = q.contents(v)
    return ",".join(str(x) for x in level.values())


def _load_instance(args: argparse.Namespace) -> PuzzleInstance:
    if args.input:
        if args.capacities or args.start:
            raise InputError("give either --input or --capacities/--start, not both")
        with open(args.input, encoding="utf-8") as fh:
            return formats.parse_instance_text(fh.read())
    if not (args.capacities and args.start):
        raise InputError("--capacities and --start are required (or --input FILE)")
    return formats.parse_instance(args.capacities, args.start, args.target)


def render_solution_text(result) -> str:
    p = result.instance
    q = p.quadruple
    out = [
        f"jugs: A={q.a} gal, B={q.b} gal, C={q.c} gal; total {q.d} gal",
        f"start A,B,C = {_contents(q, p.start)}; target A,B,C = {_contents(q, p.target)}",
    ]
    if not result.solvable:
        out.append("no solution: the target cannot be reached by measurable pours")
        return "\n".join(out) + "\n"
    for n, (step, after) in enumerate(zip(result.pours, result.path[1:]), 1):
        out.append(
            f"{n:3d}. pour {step.source} -> {step.destination}  {step.amount} gal"
            f"  -> A,B,C = {_contents(q, after)}"
        )
    out.append(f"{result.pour_count} pours; final contents {_contents(q, result.path[-1])}")
    return "\n".join(out) + "\n"


def cmd_solve(args: argparse.Namespace) -> int:
    p = _load_instance(args)
    result = shortest_path(p, args.successors)
    if args.format == "structured":
        print(formats.dumps(formats.result_to_dict(result)))
    else:
        sys.stdout.write(render_solution_text(result))
    if args.plot:
        from .plotting import plot_graph

        plot_graph(build_graph(p.quadruple), result.path, args.plot)
    return EXIT_SOLVABLE if result.solvable else EXIT_UNSOLVABLE


def cmd_check(args: argparse.Namespace) -> int:
    p = _load_instance(args)
    result = shortest_path(p, args.successors)
    if args.format == "structured":
        print(formats.dumps(formats.result_to_dict(result, with_path=False)))
    else:
        print("solvable" if result.solvable else "unsolvable")
    return EXIT_SOLVABLE if result.solvable else EXIT_UNSOLVABLE


def _graph_quadruple(args: argparse.Namespace) -> Quadruple:
    if args.input or args.start:
        return _load_instance(args).quadruple
    if not (args.capacities and args.total is not None):
        raise InputError("graph needs --capacities with --total or --start (or --input FILE)")
    a, b, c = formats.parse_triple(args.capacities, "capacities")
    return validate_quadruple(a, b, c, args.total)


def cmd_graph(args: argparse.Namespace) -> int:
    graph = build_graph(_graph_quadruple(args))
    if args.format == "structured":
        print(formats.dumps(formats.graph_to_dict(graph, args.hide_isolated)))
    elif args.format == "text":
        for u in graph.vertices:
            if args.hide_isolated and u in graph.isolated():
                continue
            print(f"{u} -> " + " ".join(str(v) for v in graph.adjacency[u]))
    else:
        sys.stdout.write(formats.graph_to_dot(graph, args.hide_isolated))
    if args.plot:
        from .plotting import plot_graph

        plot_graph(graph, (), args.plot, hide_isolated=args.hide_isolated)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_a < 3:
        raise InputError(f"--max-a must be at least 3, got {args.max_a}")
    t0 = time.perf_counter()
    quads = list(iter_quadruples(args.max_a))
    reports = sweep_theorem1(args.max_a, workers=args.workers)
    gcd_checked = sum(1 for _ in classic_quadruples(args.gcd_max_a))
    mismatches = gcd_crosscheck(args.gcd_max_a)
    elapsed = time.perf_counter() - t0
    if args.format == "structured":
        print(formats.dumps(formats.verify_to_dict(
            args.max_a, len(quads), reports, args.gcd_max_a, gcd_checked, mismatches)))
    else:
        print(f"model vs. pour simulator, a <= {args.max_a}: {len(quads)} quadruples checked, "
              f"{len(reports)} discrepancies")
        for r in reports:
            print(f"  {r.quadruple}: missing {list(r.missing_in_model)}, extra {list(r.extra_in_model)}")
        print(f"gcd criterion, a = b + c <= {args.gcd_max_a}: {gcd_checked} quadruples checked, "
              f"{len(mismatches)} mismatches")
        for q, s, g in mismatches:
            print(f"  {q}: search says {s}, criterion says {g}")
        print(f"elapsed {elapsed:.2f}s")
    if args.plot:
        from .plotting import plot_sweep

        plot_sweep(quads, reports, args.plot)
    return 0 if not reports and not mismatches else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threejug",
        description="Solve generic three-jug decanting puzzles via their directed state graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--capacities", metavar="A,B,C", help="jug capacities, a > b > c")
        p.add_argument("--start", metavar="A',B',C'", help="initial contents of A, B, C")
        p.add_argument("--target", metavar="I,J", help="target contents of B,C (default d/2,0)")
        p.add_argument("--input", metavar="FILE", help="JSON puzzle file instead of flags")

    p_solve = sub.add_parser("solve", help="print a shortest pour sequence")
    instance_flags(p_solve)
    p_solve.add_argument("--format", choices=["text", "structured"], default="text")
    p_solve.add_argument("--successors", choices=["model", "oracle"], default="model")
    p_solve.add_argument("--plot", metavar="FILE", help="also render the graph and path to FILE")
    p_solve.set_defaults(func=cmd_solve)

    p_check = sub.add_parser("check", help="print only the solvability verdict")
    instance_flags(p_check)
    p_check.add_argument("--format", choices=["text", "structured"], default="text")
    p_check.add_argument("--successors", choices=["model", "oracle"], default="model")
    p_check.set_defaults(func=cmd_check)

    p_graph = sub.add_parser("graph", help="export the state graph")
    instance_flags(p_graph)
    p_graph.add_argument("--total", type=int, metavar="D", help="total wine, instead of --start")
    p_graph.add_argument("--format", choices=["dot", "structured", "text"], default="dot")
    p_graph.add_argument("--hide-isolated", action="store_true", help="omit vertices with no edges")
    p_graph.add_argument("--plot", metavar="FILE", help="also render the graph to FILE")
    p_graph.set_defaults(func=cmd_graph)

    p_verify = sub.add_parser("verify", help="sweep model-vs-simulator and gcd checks")
    p_verify.add_argument("--max-a", type=int, default=12)
    p_verify.add_argument("--gcd-max-a", type=int, default=30)
    p_verify.add_argument("--workers", type=int, default=None, help="processes for the sweep")
    p_verify.add_argument("--format", choices=["text", "structured"], default="text")
    p_verify.add_argument("--plot", metavar="FILE", help="render a per-capacity summary to FILE")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except JugError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
