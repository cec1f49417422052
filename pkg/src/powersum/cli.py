"""Command-line entry point: ``powersum <command> ...``.

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .bench import run_bench
from .factorization import asymptotic_check, structural_factor, verify_factorization_range
from .faulhaber import (
    DEFAULT_MAX_ORDER,
    ConsistencyError,
    bernoulli_numbers,
    build_table,
    faulhaber_eval,
    faulhaber_poly_bernoulli,
    power_sum_direct,
)
from .render import (
    DEFAULT_GOLDEN,
    GoldenFormatError,
    compare_golden,
    load_golden,
    render_document,
    render_expanded,
    render_factored,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_ORACLE_CEILING = 10**6


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _table(args, order: int):
    if order > args.max_order:
        raise UsageError(f"N={order} exceeds --max-order {args.max_order}")
    return build_table(order, ceiling=args.max_order)


def cmd_compute(args) -> int:
    table = _table(args, args.N)
    if args.format == "expanded":
        print(render_expanded(table[args.N]))
    elif args.format == "factored":
        print(render_factored(structural_factor(table, args.N)))
    else:
        print(render_document(table, args.N, factored=args.with_factored))
    return EXIT_OK


def cmd_eval(args) -> int:
    table = _table(args, args.N)
    try:
        value = faulhaber_eval(table, args.N, args.n)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.n <= args.oracle_ceiling:
        direct = power_sum_direct(args.n, args.N)
        if direct != value:
            print(
                f"oracle mismatch at N={args.N}, n={args.n}: polynomial {value}, direct {direct}",
                file=sys.stderr,
            )
            return EXIT_FAIL
    print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max < 2:
        raise UsageError("verify needs --max >= 2 (the structural claim starts at N = 2)")
    table = _table(args, args.max)
    report = verify_factorization_range(table, 2, args.max, workers=args.workers)
    bad_asym = [k for k in range(1, args.max + 1) if not asymptotic_check(table, k)]
    payload = report.to_dict()
    payload["asymptotic"] = {"range": [1, args.max], "failures": bad_asym}
    text = json.dumps(payload, indent=2 if args.pretty else None)
    print(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")

    ok = report.all_pass and not bad_asym
    passed = sum(1 for r in report.results if r.outcome.value == "pass")
    print(f"factorization: {passed}/{len(report.results)} orders pass (N = 2..{args.max})", file=sys.stderr)
    for r in report.failures():
        print(f"  N={r.order}: {r.outcome.value} {r.detail}", file=sys.stderr)
    print(
        f"leading terms: {args.max - len(bad_asym)}/{args.max} orders match n^(N+1)/(N+1) + n^N/2",
        file=sys.stderr,
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_crosscheck(args) -> int:
    table = _table(args, args.max)
    cache = bernoulli_numbers(args.max)
    for order in range(args.max + 1):
        recursive = table[order]
        closed = faulhaber_poly_bernoulli(order, cache)
        if recursive != closed:
            top = max(len(recursive.coeffs), len(closed.coeffs))
            power = next(i for i in range(top) if recursive.coeff(i) != closed.coeff(i))
            print(
                f"mismatch at N={order}, power n^{power}: recursion {recursive.coeff(power)}, "
                f"Bernoulli {closed.coeff(power)}"
            )
            return EXIT_FAIL
    print(f"recursion and Bernoulli closed form identical for N = 0..{args.max}")
    return EXIT_OK


def cmd_reproduce_appendix(args) -> int:
    try:
        golden = load_golden(args.golden)
    except OSError as exc:
        print(f"cannot read golden file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GoldenFormatError as exc:
        print(f"corrupt golden file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    top = min(max(golden), args.max_order)
    table = build_table(top, ceiling=args.max_order)
    mismatches = compare_golden(table, golden)
    for m in mismatches:
        print(m.describe())
    print(f"{len(golden) - len(mismatches)}/{len(golden)} appendix entries match")
    return EXIT_OK if not mismatches else EXIT_FAIL


def cmd_bench(args) -> int:
    if args.max > args.max_order:
        raise UsageError(f"--max {args.max} exceeds --max-order {args.max_order}")
    report = run_bench(args.max, args.reps)
    print(report.summary())
    doc = json.dumps(report.to_dict())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersum",
        description="Exact power-sum polynomials s(n, N) = 1^N + ... + n^N via a Bernoulli-free recursion.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--max-order",
        type=_nonneg,
        default=DEFAULT_MAX_ORDER,
        metavar="M",
        help=f"highest order any command may build (default {DEFAULT_MAX_ORDER})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print s(n, N)")
    p.add_argument("N", type=_nonneg)
    p.add_argument("--format", choices=["expanded", "factored", "json"], default="expanded")
    p.add_argument(
        "--with-factored", action="store_true", help="json only: include the factored form"
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("eval", help="evaluate s(n, N) at an integer n")
    p.add_argument("N", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument(
        "--oracle-ceiling",
        type=_nonneg,
        default=DEFAULT_ORACLE_CEILING,
        help="cross-check by direct summation when n is at most this (default 10^6)",
    )
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check the structural factorization for N = 2..MAX")
    p.add_argument("--max", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--pretty", action="store_true", help="indent the JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crosscheck", help="compare the recursion with the Bernoulli closed form")
    p.add_argument("--max", type=_nonneg, default=50)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("reproduce-appendix", help="compare factored forms with the golden corpus")
    p.add_argument("--golden", default=str(DEFAULT_GOLDEN), metavar="PATH")
    p.set_defaults(func=cmd_reproduce_appendix)

    p = sub.add_parser("bench", help="time table construction and verification sweeps")
    p.add_argument("--max", type=_nonneg, default=DEFAULT_MAX_ORDER)
    p.add_argument("--reps", type=_positive, default=3)
    p.add_argument("--json", metavar="PATH", help="write the JSON timing report here")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
