#!/usr/bin/env python3
"""Survey the interval parity witnesses over a range of seeds.

For each prime p and each admissible l, locate the smallest even
witness in [l, l(3l+1)/2] and the smallest odd witness in
[2l-1, l(3l-1)/2], and show how deep into the interval it sits.

    python scripts/witness_survey.py --primes 5 7 11 --ell-max 40
"""

import argparse

from singover.params import SingularParams
from singover.parity import find_even_in_interval, find_odd_in_interval
from singover.tables import parity_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11])
    parser.add_argument("--ell-max", type=int, default=40)
    args = parser.parse_args()

    top = args.ell_max * (3 * args.ell_max + 1) // 2
    for p in args.primes:
        params = SingularParams(p, 1)
        table = parity_table(params, top)
        print(f"p = {p}")
        for variant, start, finder in (
            ("even", 4, find_even_in_interval),
            ("odd", 2, find_odd_in_interval),
        ):
            for ell in range(start, args.ell_max + 1, 3):
                w = finder(params, ell, table)
                width = w.hi - w.lo
                depth = (w.n - w.lo) / width if width else 0.0
                print(
                    f"  {variant:<5} l={ell:<4} witness n={w.n:<6} "
                    f"interval [{w.lo}, {w.hi}] depth={depth:.3f}"
                )


if __name__ == "__main__":
    main()
