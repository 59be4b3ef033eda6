"""Command-line front end.

Subcommands: ``eval`` (point evaluation), ``sweep`` (alpha table to CSV),
``verify`` (claim verification runs), ``minimize`` (middle-regime minimum),
``bench`` (micro-benchmark).  Exit codes: 0 success, 1 verification failure,
2 usage or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .analysis import find_interior_minimum, gap_profile
from .bench import BENCH_SEED, run_bench
from .bounds import Regime, classify_regime, enclosure, endpoint_limits, f_alpha
from .errors import ShaferBoundsError
from .verify import (
    SUITE_ALPHAS,
    GridSpec,
    VerificationReport,
    check_inequality_chain,
    check_monotonicity,
    check_proof_lemmas,
    check_theorem2,
    oracle_arcsin,
    oracle_self_check,
)

_EXIT_OK = 0
_EXIT_VERIFY_FAILED = 1
_EXIT_USAGE = 2
_EXIT_IO = 3

#: x_tol used for the per-row minimum inside ``sweep``.
_SWEEP_XTOL = 1e-8


def _g17(value: float) -> str:
    return format(float(value), ".17g")


def _shortest(value: float) -> str:
    return repr(float(value))


def cmd_eval(args: argparse.Namespace) -> int:
    x, alpha = args.x, args.alpha
    regime = classify_regime(alpha)
    enc = enclosure(x, alpha)
    reference = oracle_arcsin(x)
    fx = f_alpha(x, alpha)

    print(f"x            = {_g17(x)}")
    print(f"alpha        = {_g17(alpha)}")
    print(f"regime       = {regime.value}")
    print(f"arcsin(x)    = {_g17(reference)}")
    if enc.lower is not None:
        print(f"lower        = {_g17(enc.lower)}  [{enc.lower_source}]")
    else:
        print("lower        =   (none: one-sided regime)")
    print(f"upper        = {_g17(enc.upper)}  [{enc.upper_source}]")
    print(f"f_alpha(x)   = {_g17(fx)}")
    if enc.lower is not None:
        print(f"lower margin = {_g17(reference - enc.lower)}")
    print(f"upper margin = {_g17(enc.upper - reference)}")
    return _EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if not args.alpha_min < args.alpha_max:
        print("error: --alpha-min must be strictly below --alpha-max", file=sys.stderr)
        return _EXIT_USAGE
    if args.steps < 2:
        print("error: --steps must be >= 2", file=sys.stderr)
        return _EXIT_USAGE
    if args.grid < 2:
        print("error: --grid must be >= 2", file=sys.stderr)
        return _EXIT_USAGE

    grid = GridSpec(n_uniform=args.grid)
    lines = ["alpha,regime,const_at_zero,const_at_one,max_gap,x_min,f_min"]
    for alpha in np.linspace(args.alpha_min, args.alpha_max, args.steps):
        alpha = float(alpha)
        regime = classify_regime(alpha)
        limits = endpoint_limits(alpha)
        if regime is Regime.UNIQUE_MINIMUM:
            result = find_interior_minimum(alpha, x_tol=_SWEEP_XTOL)
            max_gap, x_min, f_min = "", _shortest(result.x_min), _shortest(result.f_min)
        else:
            max_gap = _shortest(gap_profile(alpha, grid).max_gap)
            x_min = f_min = ""
        lines.append(
            ",".join(
                (
                    _shortest(alpha),
                    regime.value,
                    _shortest(limits.at_zero),
                    _shortest(limits.at_one),
                    max_gap,
                    x_min,
                    f_min,
                )
            )
        )
    text = "\n".join(lines) + "\n"

    try:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return _EXIT_IO
    return _EXIT_OK


def _report_line(report: VerificationReport) -> str:
    if report.skipped:
        return f"SKIP  {report.claim_id}  ({report.note})"
    status = "PASS" if report.passed else "FAIL"
    line = (
        f"{status}  {report.claim_id}  worst_margin={_shortest(report.worst_margin)}"
        f" at x={_shortest(report.worst_x)}"
        f"  (points={report.points_checked}, tol={_shortest(report.tolerance_used)})"
    )
    if report.note:
        line += f"  [{report.note}]"
    return line


def cmd_verify(args: argparse.Namespace) -> int:
    if args.tol <= 0.0:
        print("error: --tol must be positive", file=sys.stderr)
        return _EXIT_USAGE
    if args.grid < 2:
        print("error: --grid must be >= 2", file=sys.stderr)
        return _EXIT_USAGE
    alphas = list(SUITE_ALPHAS) if args.suite else [args.alpha]
    grid = GridSpec(n_uniform=args.grid)

    ok, max_err, n = oracle_self_check()
    print(f"oracle: round-trip max error {_shortest(max_err)} over {n} points "
          f"({'ok' if ok else 'FALLBACK: bisection'})")

    reports: list[VerificationReport] = [check_inequality_chain(grid, args.tol)]
    for alpha in alphas:
        reports.append(check_theorem2(alpha, grid, args.tol))
        reports.append(check_monotonicity(alpha, grid, args.tol))
    reports.extend(check_proof_lemmas(grid, alphas, args.tol))

    for report in reports:
        print(_report_line(report))

    n_skipped = sum(r.skipped for r in reports)
    failed = [r for r in reports if not r.skipped and not r.passed]
    print(
        f"{len(reports)} claims: {len(reports) - len(failed) - n_skipped} passed, "
        f"{len(failed)} failed, {n_skipped} skipped"
    )
    return _EXIT_VERIFY_FAILED if failed else _EXIT_OK


def cmd_minimize(args: argparse.Namespace) -> int:
    result = find_interior_minimum(args.alpha, x_tol=args.xtol)
    limits = endpoint_limits(args.alpha)
    print(f"alpha         = {_shortest(args.alpha)}")
    print(f"x_min         = {_shortest(result.x_min)}")
    print(f"f_min         = {_shortest(result.f_min)}")
    print(f"iterations    = {result.iterations}")
    print(f"bracket_width = {_shortest(result.bracket_width)}")
    print(f"const_at_zero = {_shortest(limits.at_zero)}")
    print(f"const_at_one  = {_shortest(limits.at_one)}")
    return _EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    rows, max_abs_err = run_bench(args.iters)
    print(f"seed=0x{BENCH_SEED:X}  n={args.iters}  median of 5 runs")
    print(f"{'backend':8} {'operation':30} {'ns/op':>12}")
    for row in rows:
        print(f"{row.backend:8} {row.operation:30} {row.ns_per_op:12.2f}")
    print(f"midpoint max abs error vs arcsin = {_shortest(max_abs_err)}")
    return _EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shaferbounds",
        description="Certified two-sided algebraic enclosures for arcsin.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the enclosure at one point")
    p_eval.add_argument("--alpha", type=float, required=True, help="shape parameter")
    p_eval.add_argument("--x", type=float, required=True, help="abscissa in (0, 1)")
    p_eval.set_defaults(func=cmd_eval)

    p_sweep = sub.add_parser("sweep", help="tabulate the family across alpha to CSV")
    p_sweep.add_argument("--alpha-min", type=float, required=True)
    p_sweep.add_argument("--alpha-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, default=25, help="number of rows (>= 2)")
    p_sweep.add_argument("--grid", type=int, default=10_001,
                         help="uniform grid size for gap profiles (>= 2)")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the claim-verification engine")
    target = p_verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--alpha", type=float, help="verify a single alpha")
    target.add_argument("--suite", action="store_true",
                        help="verify the fixed built-in alpha suite")
    p_verify.add_argument("--grid", type=int, default=100_001,
                          help="uniform grid size (default 100001)")
    p_verify.add_argument("--tol", type=float, default=1e-12,
                          help="relative slack for strict inequalities (default 1e-12)")
    p_verify.set_defaults(func=cmd_verify)

    p_min = sub.add_parser("minimize", help="locate the middle-regime interior minimum")
    p_min.add_argument("--alpha", type=float, required=True)
    p_min.add_argument("--xtol", type=float, default=1e-8,
                       help="bracket-width tolerance (default 1e-8, max 1e-6)")
    p_min.set_defaults(func=cmd_minimize)

    p_bench = sub.add_parser(
        "bench",
        help="micro-benchmark bound evaluation vs the reference inverse sine "
             f"(fixed input seed 0x{BENCH_SEED:X})",
    )
    p_bench.add_argument("--iters", type=int, default=100_000,
                         help="evaluations per operation (>= 1000)")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else _EXIT_USAGE
    try:
        return args.func(args)
    except ShaferBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return _EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
