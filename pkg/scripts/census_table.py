"""Census of 4/p solutions over a prime range, with a few summary figures.

    python scripts/census_table.py 5 2000 --csv census.csv
"""

import argparse
import csv
import statistics
import sys

from eslab.arith import primes_between
from eslab.cli import CENSUS_FIELDS
from eslab.solver import census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("p_min", type=int)
    ap.add_argument("p_max", type=int)
    ap.add_argument("--csv", help="write per-prime rows here")
    args = ap.parse_args()

    rows = [census(p) for p in primes_between(max(args.p_min, 5), args.p_max)]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CENSUS_FIELDS)
            w.writeheader()
            w.writerows(c.row() for c in rows)

    f = [c.f_ordered for c in rows]
    print(f"primes: {len(rows)}")
    print(f"f(p): min {min(f)}, median {statistics.median(f)}, max {max(f)}")
    for mod in (1, 3):
        sub = [c.f_ordered for c in rows if c.n % 4 == mod]
        print(f"  p = {mod} mod 4: mean f(p) = {statistics.mean(sub):.2f} over {len(sub)} primes")
    print(f"identity f = 3 f_I + 3 f_II fails at: {[c.n for c in rows if not c.identity_holds]}")
    print(f"primes with f_III > 0: {[c.n for c in rows if c.f_III]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
