"""Command-line interface.

Exit codes: 0 success, 1 verify-criterion failure, 2 input error.
"""
from __future__ import annotations

import argparse
import sys

from . import acceptance, bench, generators
from .formats import (
    ParseError,
    format_instance,
    format_sequence,
    format_solution,
    parse_instance,
    parse_sequence,
)
from .knapsack import solve
from .minplus import maxplus_nearconcave, minplus_nearconvex


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def cmd_solve(args):
    inst = parse_instance(_read(args.file))
    sol = solve(inst, algo=args.algo, seed=args.seed, threads=args.threads)
    sys.stdout.write(format_solution(sol, with_items=args.items))
    return 0


def cmd_convolve(args):
    f = parse_sequence(_read(args.f))
    g = parse_sequence(_read(args.g))
    h = minplus_nearconvex(f, g) if args.mode == "min" else maxplus_nearconcave(f, g)
    sys.stdout.write(format_sequence(h))
    return 0


def cmd_gen(args):
    if args.kind == "instance":
        inst = generators.knapsack_instance(
            args.seed, args.n, args.pmax, args.wmax, args.capacity
        )
        sys.stdout.write(format_instance(inst))
    else:
        seq = generators.nearconvex_sequence(
            args.seed, args.length, args.delta, args.slope
        )
        sys.stdout.write(format_sequence(seq))
    return 0


def cmd_verify(args):
    results = acceptance.run_all(trials=args.trials, seed=args.seed)
    failed = 0
    for num, name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        print(f"criterion {num:2d} {name:<26} {status}  {detail}")
        failed += not ok
    if failed:
        print(f"{failed} criterion(s) failed")
        return 1
    print("all criteria passed")
    return 0


def cmd_bench(args):
    rows = bench.run_sweep(args.sweep, args.out)
    print(f"wrote {rows} rows to {args.out}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="nearconv",
        description="Near-convex tropical convolution and knapsack solving.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a 0-1 knapsack instance file")
    s.add_argument("--algo", choices=["bellman", "fast", "symmetric", "auto"],
                   default="auto")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--items", action="store_true",
                   help="also print the chosen item indices (1-based)")
    s.add_argument("file", help="instance file, or - for stdin")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("convolve", help="tropical convolution of two sequence files")
    c.add_argument("--mode", choices=["min", "max"], required=True)
    c.add_argument("f")
    c.add_argument("g")
    c.set_defaults(func=cmd_convolve)

    g = sub.add_parser("gen", help="generate a seeded instance or sequence")
    gsub = g.add_subparsers(dest="kind", required=True)
    gi = gsub.add_parser("instance")
    gi.add_argument("--seed", type=int, required=True)
    gi.add_argument("--n", type=int, required=True)
    gi.add_argument("--pmax", type=int, required=True)
    gi.add_argument("--wmax", type=int, required=True)
    gi.add_argument("--capacity", type=int, default=None)
    gi.set_defaults(func=cmd_gen, kind="instance")
    gs = gsub.add_parser("seq")
    gs.add_argument("--seed", type=int, required=True)
    gs.add_argument("--len", dest="length", type=int, required=True)
    gs.add_argument("--delta", type=int, required=True)
    gs.add_argument("--slope", type=int, default=100)
    gs.set_defaults(func=cmd_gen, kind="seq")

    v = sub.add_parser("verify", help="run the acceptance criteria")
    v.add_argument("--trials", type=int, default=None,
                   help="scale per-criterion corpus sizes down (smoke runs)")
    v.add_argument("--seed", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="CSV benchmark over a parameter sweep")
    b.add_argument("--sweep", required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
