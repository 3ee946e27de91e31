"""Command-line front end.

Exit codes: 0 success, 2 unreadable input or bad family spec, 3 the input is
not a partial order, 4 an internal check failed, 5 the exhaustive oracle
was asked for too many elements.

Every INPUT argument is a poset file path, ``-`` for stdin, or a family
spec such as ``chain:8`` or ``random:50:0.1:seed=7``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench
from .core import Poset
from .errors import InvalidSpec, NotAPoset, ParseError, ProofTraceError, TooLargeForOracle
from .fileio import MODES, format_poset, parse_poset, to_dot
from .generators import generate, parse_family
from .maxcut import brute_force_max_cut, classify, make_cut, max_dicut, verify_half_bound
from .prooftrace import check_agreement, format_trace, run_induction

SEED_ENV = "POSETCUT_SEED"

EXIT_OK, EXIT_PARSE, EXIT_NOT_POSET, EXIT_ASSERT, EXIT_ORACLE = 0, 2, 3, 4, 5


class CheckFailed(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InvalidSpec(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def load(arg: str, seed: int) -> Poset:
    if arg == "-":
        return parse_poset(sys.stdin.read())
    if os.path.exists(arg):
        try:
            with open(arg, encoding="ascii") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise ParseError(f"cannot read {arg}: {exc}") from None
        return parse_poset(text)
    if ":" in arg:
        return generate(parse_family(arg, default_seed=seed))
    raise ParseError(f"no such file and not a family spec: {arg!r}")


def _ids(s) -> str:
    return " ".join(map(str, sorted(s)))


def cmd_classify(args, out):
    p = load(args.input, args.seed)
    cls = classify(p)
    out.write("element up down category\n")
    for v in range(p.n):
        out.write(f"{v} {cls.up[v]} {cls.down[v]} {cls.category(v).value}\n")
    out.write(f"delta: {_ids(cls.delta)}\n")
    out.write(f"sigma: {_ids(cls.sigma)}\n")
    out.write(f"lambda: {_ids(cls.lambda_)}\n")
    out.write(f"|delta|={len(cls.delta)} |sigma|={len(cls.sigma)} |lambda|={len(cls.lambda_)}\n")


def cmd_maxcut(args, out):
    p = load(args.input, args.seed)
    if args.oracle:
        oracle = brute_force_max_cut(p)  # raises TooLargeForOracle before any output
    cut = max_dicut(p)
    out.write(f"B: {_ids(cut.b)}\n")
    out.write(f"U: {_ids(cut.u)}\n")
    out.write(f"size: {cut.size}\n")
    out.write(f"m: {p.m}\n")
    if p.m:
        out.write(f"ratio: {cut.size / p.m:.6f}\n")
    else:
        out.write("ratio: 0 vacuous (m=0)\n")
    if args.check:
        ok = verify_half_bound(p, cut)
        out.write(f"half-bound: {'ok' if ok else 'FAILED'}\n")
        if not ok:
            raise CheckFailed(f"half bound fails: 2*{cut.size} < {p.m}")
    if args.oracle:
        out.write(f"oracle: {oracle.size}\n")
        if oracle.size != cut.size:
            raise CheckFailed(f"oracle size {oracle.size} != {cut.size}")


def cmd_trace(args, out):
    p = load(args.input, args.seed)
    trace = run_induction(p)
    for line in format_trace(trace):
        out.write(line + "\n")
    check_agreement(p, trace)
    out.write(f"agrees with direct cut size {trace.final_cut.size}\n")


def cmd_gen(args, out):
    spec = parse_family(args.spec, default_seed=args.seed)
    out.write(format_poset(generate(spec), args.mode))


def cmd_export_dot(args, out):
    p = load(args.input, args.seed)
    cut = None
    if args.bottom is not None:
        ids = [int(t) for t in args.bottom.replace(",", " ").split()]
        cut = make_cut(p, ids)
    elif args.cut:
        cut = max_dicut(p)
    out.write(to_dot(p, cut))


def cmd_bench(args, out):
    if not args.specs and not args.scaling:
        raise InvalidSpec("give at least one family spec or --scaling")
    specs = [parse_family(s, default_seed=args.seed) for s in args.specs]
    rows = bench.run_bench(specs, trials=args.trials, seed=args.seed)
    for r in rows:
        if r.algorithm == "theorem" and r.m and 2 * r.size < r.m:
            raise CheckFailed(f"theorem row below half: {r}")
    out.write(bench.to_csv(rows))
    if args.scaling:
        if rows:
            out.write("\n")
        ns = [int(v) for v in args.scaling_sizes.split(",")]
        out.write(bench.to_csv(bench.doubling_experiment(ns)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetcut", description="Maximum directed cuts of finite posets.")
    parser.add_argument(
        "--seed", type=int, default=None,
        help=f"seed for random families and baselines (default: ${SEED_ENV} or 0)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="deficit / surplus / balanced table")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("maxcut", help="maximum directed cut")
    p.add_argument("input")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive search and compare")
    p.add_argument("--check", action="store_true", help="assert the half bound")
    p.set_defaults(func=cmd_maxcut)

    p = sub.add_parser("trace", help="step-by-step induction trace")
    p.add_argument("input")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("bench", help="CSV benchmark rows")
    p.add_argument("specs", nargs="*")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--scaling", action="store_true", help="append the chain doubling experiment")
    p.add_argument("--scaling-sizes", default="500,1000,2000,4000")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a generated poset file")
    p.add_argument("spec")
    p.add_argument("--mode", choices=MODES, default="relations")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="Hasse diagram as Graphviz DOT")
    p.add_argument("input")
    p.add_argument("--cut", action="store_true", help="color the maximum cut")
    p.add_argument("--bottom", help="color the cut with this bottom side, e.g. 0,2,5")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.seed is None:
            args.seed = default_seed()
        args.func(args, out)
    except (ParseError, InvalidSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAPoset as exc:
        print(f"not a poset: {exc}", file=sys.stderr)
        return EXIT_NOT_POSET
    except TooLargeForOracle as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (CheckFailed, ProofTraceError, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_ASSERT
    except ValueError as exc:
        # remaining library errors (bad cut, bad ids) are input problems
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
