"""a_N against N and N^(5/2), next to the constants 3/pi^2 and 1/(2 sqrt(2) pi^2).

    python scripts/lattice_trend.py 10 20000
"""

import math
import sys

from eslab.lattice import count_lattice_sliced, totient_constant_report


def main(lo=10, hi=20000):
    print(f"{'N':>8} {'a_N':>12} {'a_N/N':>10} {'a_N/N^2.5':>12} {'a_N/(N^1.5 ln N)':>18}")
    N = lo
    while N <= hi:
        a = count_lattice_sliced(N).a_N
        print(f"{N:>8} {a:>12} {a / N:>10.4f} {a / N**2.5:>12.3e} {a / (N**1.5 * math.log(N)):>18.5f}")
        N *= 2
    print(f"3/pi^2 = {3 / math.pi**2:.5f}; 1/(2 sqrt 2 pi^2) = {1 / (2 * math.sqrt(2) * math.pi**2):.5f}")
    rep = totient_constant_report(10**5)
    print(f"Phi(1e5)/1e10 = {rep['Phi_over_X2']:.6f} (3/pi^2 = {rep['three_over_pi2']:.6f}, "
          f"6/pi^2 = {rep['six_over_pi2']:.6f})")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3]))
