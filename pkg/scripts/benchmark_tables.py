#!/usr/bin/env python3
"""Timing survey of the table pipelines at increasing degrees.

Run from the repo root after an editable install:

    python scripts/benchmark_tables.py --degrees 1000 10000 100000
"""

import argparse
import time

from singover.params import SingularParams
from singover.tables import (
    clear_caches,
    coefficients_product,
    coefficients_theta,
    parity_table,
)


def timed(label, fn, *args):
    clear_caches()
    start = time.perf_counter()
    fn(*args)
    print(f"  {label:<28} {time.perf_counter() - start:8.3f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=5)
    parser.add_argument("--i", type=int, default=1)
    parser.add_argument(
        "--degrees", type=int, nargs="+", default=[1000, 10_000, 100_000]
    )
    args = parser.parse_args()
    params = SingularParams(args.k, args.i)

    for n in args.degrees:
        print(f"N = {n} (k={args.k}, i={args.i})")
        timed("parity table (GF(2))", parity_table, params, n)
        if n <= 20_000:
            timed("exact table (theta)", coefficients_theta, params, n)
        if n <= 4000:
            timed("exact table (product)", coefficients_product, params, n)


if __name__ == "__main__":
    main()
