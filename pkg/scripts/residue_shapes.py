"""Continued-fraction shapes of a/p by residue class, for several numerators a.

    python scripts/residue_shapes.py 2 9 3000
"""

import sys

from eslab.solver import cf_residue_classifier, format_shape


def main(a_lo=2, a_hi=9, p_max=3000):
    for a in range(a_lo, a_hi + 1):
        print(f"a = {a}")
        for r, shapes in cf_residue_classifier(a, a + 1, p_max).items():
            print(f"  p = {r} mod {a}: {' '.join(format_shape(s) for s in shapes)}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:4]))
