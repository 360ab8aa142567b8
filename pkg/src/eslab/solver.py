"""Solutions of a/n = 1/x + 1/y + 1/z, their census by type, and the
continued-fraction route that rules out the "type III" shape for prime n.

For fixed x the residue ``a/n - 1/x = A/B`` (reduced) leaves
``1/y + 1/z = A/B``, which is equivalent to ``(A y - B)(A z - B) = B^2``.
Canonical solutions y <= z therefore correspond to divisors d <= B of B^2
with ``d = -B (mod A)``; then ``y = (B + d)/A`` and ``z = (B + B^2/d)/A``.
:func:`enumerate_solutions_scan` keeps the plain y-loop as a reference.
"""

from __future__ import annotations

import enum
import itertools
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .arith import (as_odd_square_root, divisors_from_factorization, factorize,
                    is_prime, square_divisors)
from .cf import cf_expand, convergents


@dataclass(frozen=True, order=True)
class ESSolution:
    x: int
    y: int
    z: int
    ordered: bool = field(default=False, compare=False)

    def __post_init__(self):
        if min(self.x, self.y, self.z) < 1:
            raise ValueError(f"coordinates must be positive: {self}")
        if not self.ordered and not self.x <= self.y <= self.z:
            raise ValueError(f"canonical solution must have x <= y <= z: {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def satisfies(self, n: int, a: int = 4) -> bool:
        x, y, z = self.x, self.y, self.z
        return a * x * y * z == n * (x * y + y * z + z * x)

    def permutations(self) -> list["ESSolution"]:
        """Distinct ordered triples with the same entries."""
        return [ESSolution(*t, ordered=True)
                for t in sorted(set(itertools.permutations(self.as_tuple())))]


class SolutionKind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class SolutionType:
    tag: SolutionKind
    is_type_iii: bool


@dataclass(frozen=True)
class Census:
    n: int
    f_ordered: int
    f_unordered: int
    f_I: int
    f_II: int
    f_III: int

    @property
    def identity_holds(self) -> bool:
        return self.f_ordered == 3 * self.f_I + 3 * self.f_II

    def row(self) -> dict:
        return {"p": self.n, "f_ordered": self.f_ordered, "f_unordered": self.f_unordered,
                "f_I": self.f_I, "f_II": self.f_II, "f_III": self.f_III,
                "identity_holds": self.identity_holds}


# --- enumeration ---------------------------------------------------------

def _x_range(target: Fraction) -> range:
    # smallest coordinate: 1/x < target <= 3/x
    lo = target.denominator // target.numerator + 1
    hi = 3 * target.denominator // target.numerator
    return range(max(lo, 1), hi + 1)


@lru_cache(maxsize=64)
def _square_divisors_of_n(n: int) -> tuple[int, ...]:
    return square_divisors(n)


def _solutions_for_x(a: int, n: int, x: int) -> list[ESSolution]:
    A, B = a * x - n, n * x
    g = math.gcd(A, B)
    A //= g
    B //= g
    if g == 1 and math.gcd(n, x) == 1:
        # B^2 = n^2 x^2 with coprime parts: divisors split as products
        # only d <= B can give y <= z
        dx = square_divisors(x)
        hits = []
        for u in _square_divisors_of_n(n):
            if u > B:
                break
            hits.extend(d for v in dx[:bisect_right(dx, B // u)]
                        if ((d := u * v) + B) % A == 0)
    else:
        hits = [d for d in divisors_from_factorization(
                    {q: 2 * e for q, e in factorize(B).items()})
                if (d + B) % A == 0]
    out = []
    for d in hits:
        if d <= B:
            y = (B + d) // A
            if y >= x:
                out.append(ESSolution(x, y, (B + B * B // d) // A))
    return out


def enumerate_solutions_general(a: int, n: int) -> list[ESSolution]:
    """All canonical x <= y <= z with 1/x + 1/y + 1/z = a/n, sorted.

    Returns an empty list when a/n > 3.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    target = Fraction(a, n)
    if target > 3:
        return []
    out = []
    for x in _x_range(target):
        out.extend(_solutions_for_x(a, n, x))
    out.sort()
    return out


def enumerate_solutions(n: int, ordered: bool = False) -> list[ESSolution]:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    sols = enumerate_solutions_general(4, n)
    if not ordered:
        return sols
    return sorted(t for s in sols for t in s.permutations())


def enumerate_solutions_scan(n: int, a: int = 4) -> list[ESSolution]:
    """Reference enumerator: loop x and y over their bounds, solve z exactly.

    Quadratic in n; only meant for checking the divisor-based path.
    """
    target = Fraction(a, n)
    out = []
    if target > 3:
        return out
    for x in _x_range(target):
        rest = target - Fraction(1, x)
        # 1/y < rest <= 2/y
        y_lo = max(x, math.floor(1 / rest) + 1)
        y_hi = math.floor(2 / rest)
        for y in range(y_lo, y_hi + 1):
            zinv = rest - Fraction(1, y)
            if zinv.numerator == 1:
                out.append(ESSolution(x, y, zinv.denominator))
    return out


# --- classification ------------------------------------------------------

def is_type_iii_triple(x: int, y: int, z: int) -> bool:
    """gcd(x, y) = 1 and xy < sqrt(z/2), tested as 2(xy)^2 < z."""
    return math.gcd(x, y) == 1 and 2 * (x * y) ** 2 < z


def classify(p: int, sol: ESSolution) -> SolutionType:
    """Type I/II by how many coordinates p divides.

    The type III flag uses the designated roles of an ordered record; for a
    canonical record it is set if any role assignment qualifies.
    """
    hits = sum(1 for c in sol.as_tuple() if c % p == 0)
    if hits == 1:
        tag = SolutionKind.TYPE_I
    elif hits == 2:
        tag = SolutionKind.TYPE_II
    else:
        raise ValueError(f"{sol.as_tuple()} has {hits} coordinates divisible by {p}")
    if sol.ordered:
        iii = is_type_iii_triple(*sol.as_tuple())
    else:
        iii = any(is_type_iii_triple(*t) for t in itertools.permutations(sol.as_tuple()))
    return SolutionType(tag, iii)


def census_from_solutions(p: int, sols: list[ESSolution]) -> Census:
    f_ord = f_i = f_ii = f_iii = 0
    for s in sols:
        for t in s.permutations():
            x, y, z = t.as_tuple()
            f_ord += 1
            if x % p == 0 and (y * z) % p != 0:
                f_i += 1
            elif y % p == 0 and z % p == 0 and x % p != 0:
                f_ii += 1
            if is_type_iii_triple(x, y, z):
                f_iii += 1
    return Census(p, f_ord, len(sols), f_i, f_ii, f_iii)


def census(p: int) -> Census:
    if not is_prime(p) or p < 5:
        raise ValueError(f"census needs a prime p >= 5, got {p}")
    return census_from_solutions(p, enumerate_solutions(p))


# --- type III scan -------------------------------------------------------

@lru_cache(maxsize=8)
def coprime_pairs(xy_cap: int) -> tuple[tuple[int, int], ...]:
    """Coprime (x, y), x <= y, xy <= xy_cap."""
    return tuple((x, y) for x in range(1, math.isqrt(xy_cap) + 1)
                 for y in range(x, xy_cap // x + 1) if math.gcd(x, y) == 1)


@dataclass
class TypeIIIReport:
    p: int
    xy_cap: int
    pairs_scanned: int = 0
    integral_z: int = 0
    violations: list[ESSolution] = field(default_factory=list)
    enumeration_violations: list[ESSolution] = field(default_factory=list)
    enumeration_checked: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations and not self.enumeration_violations


def verify_type_iii_absent(p: int, xy_cap: int = 1000, *,
                           solutions: Optional[list[ESSolution]] = None,
                           cross_check: bool = True) -> TypeIIIReport:
    """Look for coprime (x, y) with |4/p - (x+y)/xy| = 1/z and 2(xy)^2 < z.

    Both signs of the difference are scanned. With ``cross_check`` the full
    solution list of 4/p (``solutions`` if given) is filtered as well.
    """
    if xy_cap < 1:
        raise ValueError("xy_cap must be >= 1")
    rep = TypeIIIReport(p, xy_cap)
    for x, y in coprime_pairs(xy_cap):
        rep.pairs_scanned += 1
        q = x * y
        # z = 1/|4/p - (x+y)/q| = p q / |4q - p(x+y)|
        diff = abs(4 * q - p * (x + y))
        if diff == 0:
            continue
        num = p * q
        if num % diff:
            continue
        rep.integral_z += 1
        z = num // diff
        if 2 * q * q < z:
            rep.violations.append(ESSolution(x, y, z, ordered=True))
    if cross_check:
        sols = enumerate_solutions(p) if solutions is None else solutions
        rep.enumeration_checked = True
        for s in sols:
            for t in s.permutations():
                if is_type_iii_triple(*t.as_tuple()):
                    rep.enumeration_violations.append(t)
    return rep


# --- proof trace ---------------------------------------------------------

def solve_sum_product(s: int, q: int) -> Optional[tuple[int, int]]:
    """Positive integers x <= y with x + y = s and xy = q, if any."""
    disc = s * s - 4 * q
    if disc < 0:
        return None
    r = math.isqrt(disc)
    if r * r != disc or (s - r) % 2:
        return None
    x, y = (s - r) // 2, (s + r) // 2
    if x < 1:
        return None
    return x, y


@dataclass(frozen=True)
class TraceStep:
    k: int
    p_k: int
    q_k: int
    D: int
    odd_square: Optional[int]
    z0: Fraction
    coprime: bool
    roots: Optional[tuple[int, int]]

    @property
    def blocked(self) -> bool:
        return self.D < 0 or self.odd_square is None


@dataclass(frozen=True)
class ProofTrace:
    p: int
    steps: tuple[TraceStep, ...]

    @property
    def all_numerators_one(self) -> bool:
        return all(s.p_k == 1 for s in self.steps)

    @property
    def all_D_negative(self) -> bool:
        return all(s.D < 0 for s in self.steps)

    @property
    def no_type_iii(self) -> bool:
        return all(s.blocked for s in self.steps)


def proof_trace(p: int) -> ProofTrace:
    """Run each nontrivial convergent of 4/p through the quadratic
    X^2 - p_k X + q_k and record where it fails."""
    target = Fraction(4, p)
    steps = []
    for c in convergents(cf_expand(target))[1:-1]:
        if c.p == 0:
            continue
        D = c.p * c.p - 4 * c.q
        steps.append(TraceStep(
            k=c.k, p_k=c.p, q_k=c.q, D=D,
            odd_square=as_odd_square_root(D),
            z0=1 / abs(target - c.value),
            coprime=math.gcd(c.p, c.q) == 1,
            roots=solve_sum_product(c.p, c.q),
        ))
    return ProofTrace(p, tuple(steps))


# --- residue classes for a/p ---------------------------------------------

def cf_shape(a: int, p: int) -> tuple[str, ...]:
    """Quotients of a/p with a1 replaced by '*'."""
    q = [str(v) for v in cf_expand(Fraction(a, p)).quotients]
    if len(q) > 1:
        q[1] = "*"
    return tuple(q)


def format_shape(shape: tuple[str, ...]) -> str:
    return "[" + ",".join(shape) + "]"


def cf_residue_classifier(a: int, p_min: int, p_max: int) -> dict[int, list[tuple[str, ...]]]:
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    classes: dict[int, set[tuple[str, ...]]] = {}
    for p in range(max(p_min, 2), p_max + 1):
        if a % p == 0 or not is_prime(p):
            continue
        classes.setdefault(p % a, set()).add(cf_shape(a, p))
    return {r: sorted(classes[r], key=lambda s: (len(s), s)) for r in sorted(classes)}
