"""Counting the triples (x, y, z) in [1, N]^3 with gcd(x, y) = 1 and
xy < sqrt(z/2), plus the Euler totient sieve and its summatory function.

All counts are exact integers. Floating point (and pi) only shows up in
:func:`totient_constant_report`, which is descriptive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

RATIO_PLACES = 20


@dataclass(frozen=True)
class TotientTable:
    limit: int
    phi: tuple[int, ...]  # phi[0] is a placeholder; phi[n] for 1 <= n <= limit

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(n)
        return self.phi[n]

    def values(self) -> list[int]:
        return list(self.phi[1:])


def totient_sieve(X: int) -> TotientTable:
    """phi(n) for 1 <= n <= X with a linear sieve."""
    if X < 1:
        raise ValueError(f"X must be >= 1, got {X}")
    phi = [0] * (X + 1)
    phi[1] = 1
    primes: list[int] = []
    for i in range(2, X + 1):
        if phi[i] == 0:
            phi[i] = i - 1
            primes.append(i)
        for p in primes:
            ip = i * p
            if ip > X:
                break
            if i % p == 0:
                phi[ip] = phi[i] * p
                break
            phi[ip] = phi[i] * (p - 1)
    return TotientTable(X, tuple(phi))


def totient_summatory(X: int) -> int:
    return sum(totient_sieve(X).phi)


def totient_constant_report(X: int) -> dict:
    """Empirical Phi(X)/X^2 next to 3/pi^2 and 6/pi^2."""
    total = totient_summatory(X)
    ratio = total / X**2
    return {
        "X": X,
        "Phi": total,
        "Phi_over_X2": ratio,
        "three_over_pi2": 3 / math.pi**2,
        "six_over_pi2": 6 / math.pi**2,
        "normalised_by_3_over_pi2": ratio * math.pi**2 / 3,
        "normalised_by_6_over_pi2": ratio * math.pi**2 / 6,
    }


def threshold(z: int) -> int:
    """Largest m >= 0 with 2 m^2 < z."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    m = math.isqrt((z - 1) // 2)
    if 2 * (m + 1) ** 2 < z:
        m += 1
    return m


# --- per-slice pair counts -------------------------------------------------

def coprime_pairs_under_brute(m: int) -> int:
    """#{(x, y) : x, y >= 1, gcd(x, y) = 1, xy <= m} by a double loop."""
    return sum(1 for x in range(1, m + 1) for y in range(1, m // x + 1)
               if math.gcd(x, y) == 1)


@lru_cache(maxsize=None)
def _mobius(limit: int) -> tuple[int, ...]:
    mu = [1] * (limit + 1)
    is_comp = [False] * (limit + 1)
    for p in range(2, limit + 1):
        if is_comp[p]:
            continue
        for j in range(p, limit + 1, p):
            if j > p:
                is_comp[j] = True
            mu[j] = -mu[j]
        for j in range(p * p, limit + 1, p * p):
            mu[j] = 0
    mu[0] = 0
    return tuple(mu)


def divisor_summatory(t: int) -> int:
    """D(t) = #{(x, y) : xy <= t} = sum_{k <= t} floor(t/k), hyperbola method."""
    if t < 1:
        return 0
    r = math.isqrt(t)
    return 2 * sum(t // k for k in range(1, r + 1)) - r * r


def coprime_pairs_under(m: int) -> int:
    """Same count as :func:`coprime_pairs_under_brute` via Moebius inversion.

    Writing gcd(x, y) = d gives D(m) = sum_d C(m / d^2), hence
    C(m) = sum_{d^2 <= m} mu(d) D(m // d^2).
    """
    if m < 1:
        return 0
    r = math.isqrt(m)
    mu = _mobius(r)
    return sum(mu[d] * divisor_summatory(m // (d * d)) for d in range(1, r + 1) if mu[d])


# --- a_N -----------------------------------------------------------------

@dataclass(frozen=True)
class LatticeReport:
    N: int
    a_N: int
    method: str

    @property
    def ratio_lower(self) -> Fraction:
        """a_N / N, exact."""
        return Fraction(self.a_N, self.N)

    @property
    def ratio_upper(self) -> Decimal:
        """a_N / N^(5/2) to RATIO_PLACES decimal places."""
        with localcontext() as ctx:
            ctx.prec = RATIO_PLACES + 30
            val = Decimal(self.a_N) / (Decimal(self.N) ** 2 * Decimal(self.N).sqrt())
            return val.quantize(Decimal(1).scaleb(-RATIO_PLACES))

    def row(self) -> dict:
        return {"N": self.N, "a_N": self.a_N,
                "a_N_over_N": decimal_str(self.ratio_lower),
                "a_N_over_N_5_2": str(self.ratio_upper),
                "method": self.method}


def decimal_str(q: Fraction, places: int = RATIO_PLACES) -> str:
    with localcontext() as ctx:
        ctx.prec = places + 30
        val = Decimal(q.numerator) / Decimal(q.denominator)
        return str(val.quantize(Decimal(1).scaleb(-places)))


def count_lattice_brute(N: int) -> LatticeReport:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    total = 0
    for z in range(1, N + 1):
        b = threshold(z)
        for x in range(1, b + 1):
            for y in range(1, b + 1):
                if 2 * (x * y) ** 2 < z and math.gcd(x, y) == 1:
                    total += 1
    return LatticeReport(N, total, "brute")


def count_lattice_sliced(N: int) -> LatticeReport:
    """Group z by threshold B(z); each group contributes (#z) * C(B)."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    total = 0
    b_max = threshold(N)
    for b in range(1, b_max + 1):
        # z with B(z) = b: 2b^2 < z <= 2(b+1)^2
        z_lo, z_hi = 2 * b * b + 1, min(N, 2 * (b + 1) ** 2)
        total += (z_hi - z_lo + 1) * coprime_pairs_under(b)
    return LatticeReport(N, total, "sliced")


def asymptotic_report(N_values: Sequence[int], method: str = "sliced") -> list[LatticeReport]:
    if list(N_values) != sorted(N_values):
        raise ValueError("N values must be ascending")
    count = count_lattice_brute if method == "brute" else count_lattice_sliced
    return [count(N) for N in N_values]
