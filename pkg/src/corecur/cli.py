"""Command-line interface exposing the case studies and the graph toolkit.

Every subcommand is a thin adapter over the library: it parses flags,
calls one library entry point, and prints the result in a fixed canonical
format (LF line endings, comma-separated lists, space-separated
certificates).  Domain errors exit 1 with the error name on a single line;
usage errors exit 2.  The environment variable CORECUR_FUSE overrides the
solver's node budget.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import cyk as cyk_mod
from . import euclid, graph, hydra, sorting
from .engine import DEFAULT_FUSE
from .errors import CorecurError


def _parse_int_csv(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _fuse_from_env(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get("CORECUR_FUSE")
    if raw is None:
        return DEFAULT_FUSE
    try:
        fuse = int(raw)
    except ValueError:
        fuse = 0
    if fuse <= 0:
        parser.error(f"CORECUR_FUSE must be a positive integer, got {raw!r}")
    return fuse


def _print_trace(call_trace) -> None:
    sys.stdout.write(call_trace.dump())


def _cmd_sort(args, fuse) -> int:
    values = _parse_int_csv(args.input)
    run = sorting.quicksort if args.algo == "quick" else sorting.mergesort
    if args.trace:
        result, call_trace = run(values, trace=True, fuse=fuse)
    else:
        result, call_trace = run(values, fuse=fuse), None
    verdict = "PASS" if sorting.verify_sorted_permutation(values, result) else "FAIL"
    print(f"{','.join(str(x) for x in result)} {verdict}")
    if call_trace is not None:
        _print_trace(call_trace)
    return 0


def _cmd_gcd(args, fuse) -> int:
    if args.trace:
        cert, call_trace = euclid.gcd(args.m, args.n, trace=True, fuse=fuse)
    else:
        cert, call_trace = euclid.gcd(args.m, args.n, fuse=fuse), None
    verdict = "OK" if euclid.verify_cert(args.m, args.n, cert) else "FAIL"
    print(f"{cert.g} {cert.k} {cert.l} {cert.s} {cert.t} {verdict}")
    if call_trace is not None:
        _print_trace(call_trace)
    return 0


def _cmd_cyk(args, fuse) -> int:
    with open(args.grammar, encoding="utf-8") as fh:
        grammar = cyk_mod.parse_grammar_file(fh.read())
    if args.trace:
        result, call_trace = cyk_mod.cyk(grammar, args.word, trace=True, fuse=fuse)
    else:
        result, call_trace = cyk_mod.cyk(grammar, args.word, fuse=fuse), None
    print(",".join(sorted(result)))
    if call_trace is not None:
        _print_trace(call_trace)
    return 0 if grammar.start in result else 1


def _cmd_hydra(args, fuse) -> int:
    tree = hydra.parse_tree(args.tree)
    strategy = _parse_int_csv(args.strategy)
    if args.maxsteps:
        if args.trace:
            steps, call_trace = hydra.maxsteps(tree, strategy, trace=True, fuse=fuse)
        else:
            steps, call_trace = hydra.maxsteps(tree, strategy, fuse=fuse), None
        print(steps)
        if call_trace is not None:
            _print_trace(call_trace)
        return 0
    policy = hydra.leftmost_leaf if args.policy == "leftmost" else hydra.random_leaf_policy(args.seed)
    trace = hydra.play(tree, strategy, policy)
    for round_no, (_, tree_rank) in enumerate(trace):
        print(f"{round_no} {tree_rank}")
    return 0


def _cmd_wfcheck(args, fuse) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        g = graph.parse_graph(fh.read())
    if args.rank is not None:
        with open(args.rank, encoding="utf-8") as fh:
            ranking = graph.parse_ranking(fh.read())
        print("ranking: ok" if graph.verify_ranking(g, ranking) else "ranking: violated")
        return 0
    if graph.is_well_founded(g):
        print("well-founded: yes")
        for node, node_rank in graph.derive_min_rank(g).items():
            print(f"{node}: {node_rank}")
    else:
        print("well-founded: no")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corecur",
        description="Structured recursion case studies and termination toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="sort comma-separated integers")
    p_sort.add_argument("--algo", choices=("quick", "merge"), required=True)
    p_sort.add_argument("--input", required=True, help="comma-separated integers")
    p_sort.add_argument("--trace", action="store_true")
    p_sort.set_defaults(func=_cmd_sort)

    p_gcd = sub.add_parser("gcd", help="extended gcd with certificate")
    p_gcd.add_argument("m", type=int)
    p_gcd.add_argument("n", type=int)
    p_gcd.add_argument("--trace", action="store_true")
    p_gcd.set_defaults(func=_cmd_gcd)

    p_cyk = sub.add_parser("cyk", help="CYK recognition; exit 0 iff accepted")
    p_cyk.add_argument("--grammar", required=True, help="grammar file")
    p_cyk.add_argument("--word", required=True)
    p_cyk.add_argument("--trace", action="store_true")
    p_cyk.set_defaults(func=_cmd_cyk)

    p_hydra = sub.add_parser("hydra", help="play the hydra game or compute maxsteps")
    p_hydra.add_argument("--tree", required=True, help="balanced parentheses, e.g. ((()))")
    p_hydra.add_argument("--strategy", required=True, help="comma-separated naturals")
    p_hydra.add_argument("--maxsteps", action="store_true")
    p_hydra.add_argument("--policy", choices=("leftmost", "random"), default="leftmost")
    p_hydra.add_argument("--seed", type=int, default=0)
    p_hydra.add_argument("--trace", action="store_true")
    p_hydra.set_defaults(func=_cmd_hydra)

    p_wf = sub.add_parser("wfcheck", help="well-foundedness and ranking checks")
    p_wf.add_argument("--graph", required=True, help="graph file")
    p_wf.add_argument("--rank", help="ranking file to verify instead of deriving")
    p_wf.set_defaults(func=_cmd_wfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fuse = _fuse_from_env(parser)
    try:
        return args.func(args, fuse)
    except CorecurError as exc:
        print(type(exc).__name__, file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        # unreadable files and malformed flag values are usage errors
        parser.error(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
