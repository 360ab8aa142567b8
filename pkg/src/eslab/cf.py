"""Finite continued fractions of nonnegative rationals.

Indexing is 0-based with ``a0 = floor(r)``, so for ``4/p`` the expansion
starts ``[0; a1, ...]`` and the zeroth convergent is ``0/1``. Expansions are
kept in canonical form: the last partial quotient is at least 2 unless the
expansion is a single integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import is_prime


@dataclass(frozen=True)
class CFExpansion:
    quotients: tuple[int, ...]

    def __post_init__(self):
        q = self.quotients
        if not q:
            raise ValueError("empty expansion")
        if q[0] < 0 or any(a < 1 for a in q[1:]):
            raise ValueError(f"invalid partial quotients {q}")
        if len(q) > 1 and q[-1] < 2:
            raise ValueError(f"non-canonical expansion {q}: last quotient must be >= 2")

    @property
    def length(self) -> int:
        """Index ``l`` of the last partial quotient."""
        return len(self.quotients) - 1

    def value(self) -> Fraction:
        return evaluate(self.quotients)

    def __str__(self) -> str:
        head, *tail = self.quotients
        return f"[{head}]" if not tail else f"[{head};{','.join(map(str, tail))}]"


@dataclass(frozen=True)
class Convergent:
    k: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ErrorTerm:
    k: int
    r: Fraction
    complete_quotient: Fraction | None  # x_{k+1}; None at the last index
    q: int
    q_prev: int

    def identity_product(self) -> Fraction:
        """r_k * q_k * (x_{k+1} q_k + q_{k-1}); equals 1 for every k < l."""
        if self.complete_quotient is None:
            raise ValueError("no complete quotient at the last index")
        return self.r * self.q * (self.complete_quotient * self.q + self.q_prev)


def evaluate(quotients: Sequence[int]) -> Fraction:
    """Value of [a0; a1, ..., al], folded from the right."""
    acc = Fraction(quotients[-1])
    for a in reversed(quotients[:-1]):
        acc = a + 1 / acc
    return acc


def cf_expand(r: Fraction | int) -> CFExpansion:
    r = Fraction(r)
    if r < 0:
        raise ValueError(f"cf_expand needs a nonnegative rational, got {r}")
    num, den = r.numerator, r.denominator
    out = []
    while den:
        a, rem = divmod(num, den)
        out.append(a)
        num, den = den, rem
    # Euclid already ends on a quotient >= 2 whenever l >= 1
    return CFExpansion(tuple(out))


def convergents(cf: CFExpansion) -> list[Convergent]:
    p_prev, q_prev = 1, 0
    p, q = cf.quotients[0], 1
    out = [Convergent(0, p, q)]
    for k, a in enumerate(cf.quotients[1:], start=1):
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Convergent(k, p, q))
    return out


def complete_quotient(cf: CFExpansion, k: int) -> Fraction:
    """x_{k+1} = [a_{k+1}; ..., a_l] for 0 <= k < l."""
    if not 0 <= k < cf.length:
        raise IndexError(f"k={k} outside [0, {cf.length})")
    return evaluate(cf.quotients[k + 1:])


def error_term(r: Fraction | int, k: int) -> ErrorTerm:
    r = Fraction(r)
    cf = cf_expand(r)
    if not 0 <= k <= cf.length:
        raise IndexError(f"k={k} outside [0, {cf.length}]")
    convs = convergents(cf)
    c = convs[k]
    q_prev = convs[k - 1].q if k > 0 else 0
    x_next = complete_quotient(cf, k) if k < cf.length else None
    return ErrorTerm(k=k, r=abs(r - c.value), complete_quotient=x_next, q=c.q, q_prev=q_prev)


def legendre_check(target: Fraction, candidate: Fraction) -> tuple[bool, bool]:
    """Return (|target - r/s| < 1/(2 s^2), r/s is a convergent of target).

    The inequality is strict; equality reports False.
    """
    target, candidate = Fraction(target), Fraction(candidate)
    s = candidate.denominator
    holds = abs(target - candidate) < Fraction(1, 2 * s * s)
    is_conv = any(c.p == candidate.numerator and c.q == s
                  for c in convergents(cf_expand(target)))
    return holds, is_conv


def four_over_p_closed_form(p: int) -> tuple[CFExpansion, list[Fraction]]:
    """Expansion and convergent values of 4/p from the residue of p mod 4.

    Built from the closed forms alone, so it can be checked against
    :func:`cf_expand` rather than derived from it.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 5 or not is_prime(p):
        raise ValueError(f"need a prime p >= 5, got {p!r}")
    if p % 4 == 1:
        a1 = (p - 1) // 4
        return (CFExpansion((0, a1, 4)),
                [Fraction(0), Fraction(4, p - 1), Fraction(4, p)])
    a1 = (p - 3) // 4
    return (CFExpansion((0, a1, 1, 3)),
            [Fraction(0), Fraction(4, p - 3), Fraction(4, p + 1), Fraction(4, p)])
