"""Exact integer and rational helpers shared by the rest of the package.

Everything here works on Python ints and :class:`fractions.Fraction`, so
there is no overflow and no rounding anywhere in the core.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

Rational = Fraction


def _natural(value: int, name: str = "value", minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals; ``gcd(0, 0) == 0``."""
    _natural(a, "a")
    _natural(b, "b")
    return math.gcd(a, b)


def rat_make(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator.

    Raises ZeroDivisionError for ``den == 0``.
    """
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/0")
    return Fraction(num, den)


def rat_sub_abs(a: Fraction, b: Fraction) -> Fraction:
    return abs(Fraction(a) - Fraction(b))


def isqrt(n: int) -> int:
    """floor(sqrt(n)) for n >= 0."""
    return math.isqrt(_natural(n, "n"))


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def as_odd_square_root(n: int) -> Optional[int]:
    """Return ``a`` if ``n == a*a`` with ``a`` odd, else None."""
    if n < 0:
        return None
    a = math.isqrt(n)
    if a * a != n or a % 2 == 0:
        return None
    return a


def is_prime(n: int) -> bool:
    """Deterministic trial division on 6k +/- 1 up to isqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    limit = math.isqrt(n)
    f = 5
    while f <= limit:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation {prime: exponent} of n >= 1 by trial division."""
    _natural(n, "n", 1)
    out: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    f = 5
    while f * f <= n:
        for q in (f, f + 2):
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors_from_factorization(fact: dict[int, int]) -> list[int]:
    divs = [1]
    for q, e in fact.items():
        step = []
        pw = 1
        for _ in range(e):
            pw *= q
            step.extend(d * pw for d in divs)
        divs.extend(step)
    return divs


@lru_cache(maxsize=None)
def square_divisors(n: int) -> tuple[int, ...]:
    """Sorted divisors of n**2. Cached: the solver asks for the same x many times."""
    return tuple(sorted(divisors_from_factorization({q: 2 * e for q, e in factorize(n).items()})))
