#!/usr/bin/env python3
"""Exploratory scan for arithmetic progressions with constant parity.

Looks for pairs (a, b) such that C-bar_{p,1}(a n + b) has the same
parity for every sampled n with a n + b <= X. This is a heuristic
screen only: a progression surviving the scan is a candidate, not a
theorem, and deeper scans routinely kill candidates.

    python scripts/scan_progressions.py --p 5 --a-max 24 --x 20000
"""

import argparse

from singover.params import SingularParams
from singover.tables import parity_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=5)
    parser.add_argument("--a-max", type=int, default=24)
    parser.add_argument("--x", type=int, default=20_000)
    parser.add_argument(
        "--min-hits", type=int, default=50, help="smallest sample size to report"
    )
    args = parser.parse_args()

    params = SingularParams(args.p, 1)
    table = parity_table(params, args.x)
    bits = table.bits

    print(f"# candidates for constant parity of C-bar_{{{args.p},1}}(a n + b), "
          f"a n + b <= {args.x} (heuristic, no proof)")
    for a in range(2, args.a_max + 1):
        for b in range(a):
            terms = range(b if b > 0 else a + b, args.x + 1, a)
            count = len(terms)
            if count < args.min_hits:
                continue
            parities = {(bits >> n) & 1 for n in terms}
            if len(parities) == 1:
                parity = "odd" if parities == {1} else "even"
                print(f"a={a:<3} b={b:<3} always {parity} over {count} samples")


if __name__ == "__main__":
    main()
