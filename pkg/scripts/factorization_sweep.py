"""Run the structural factorization check past the default range.

    python scripts/factorization_sweep.py --max 150 --csv sweep.csv

Prints one row per order: N, outcome, residual degree, denominator, seconds.
"""
import argparse
import csv
import sys
import time

from powersum import build_table, verify_factorization_range


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=150)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--csv", help="write rows here instead of stdout")
    args = parser.parse_args(argv)

    t0 = time.perf_counter()
    table = build_table(args.max, ceiling=args.max)
    build_secs = time.perf_counter() - t0
    report = verify_factorization_range(table, 2, args.max, workers=args.workers)

    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    writer = csv.writer(out)
    writer.writerow(["N", "outcome", "residual_degree", "denominator", "seconds"])
    for r in report.results:
        writer.writerow([r.order, r.outcome.value, r.residual_degree, r.denominator, f"{r.seconds:.6f}"])
    if args.csv:
        out.close()
    print(
        f"built N=0..{args.max} in {build_secs:.2f}s; "
        f"{len(report.results) - len(report.failures())}/{len(report.results)} orders pass",
        file=sys.stderr,
    )
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
