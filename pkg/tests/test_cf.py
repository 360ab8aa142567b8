from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eslab.cf import (CFExpansion, complete_quotient, convergents, cf_expand, error_term,
                      evaluate, four_over_p_closed_form, legendre_check)
from oracles import euclid_quotients, sieve_primes, truncation_values

nonneg = st.builds(Fraction, st.integers(0, 10**4), st.integers(1, 10**4))


@pytest.mark.parametrize("r,quotients", [
    (Fraction(4, 5), (0, 1, 4)),
    (Fraction(4, 7), (0, 1, 1, 3)),
    (Fraction(7), (7,)),
    (Fraction(0), (0,)),
    (Fraction(4, 13), (0, 3, 4)),
])
def test_cf_expand_examples(r, quotients):
    assert cf_expand(r).quotients == quotients


def test_cf_expand_rejects_negative():
    with pytest.raises(ValueError):
        cf_expand(Fraction(-1, 3))


def test_noncanonical_expansion_rejected():
    with pytest.raises(ValueError):
        CFExpansion((0, 1, 1, 2, 1))


@given(nonneg)
def test_round_trip(r):
    cf = cf_expand(r)
    assert cf.value() == r
    assert list(cf.quotients) == euclid_quotients(r.numerator, r.denominator)
    if cf.length >= 1:
        assert cf.quotients[-1] >= 2
    assert convergents(cf)[-1].value == r


def test_round_trip_grid():
    for num in range(0, 400):
        for den in range(1, 120):
            r = Fraction(num, den)
            cf = cf_expand(r)
            assert evaluate(cf.quotients) == r


@pytest.mark.parametrize("quotients,values", [
    ((0, 1, 1, 3), ["0", "1", "1/2", "4/7"]),
    ((0, 3, 4), ["0", "1/3", "4/13"]),
    ((7,), ["7"]),
])
def test_convergents_examples(quotients, values):
    convs = convergents(CFExpansion(quotients))
    assert [c.value for c in convs] == [Fraction(v) for v in values]
    assert [c.k for c in convs] == list(range(len(quotients)))


@given(nonneg)
def test_convergents_match_truncations(r):
    cf = cf_expand(r)
    convs = convergents(cf)
    assert [c.value for c in convs] == truncation_values(list(cf.quotients))
    for prev, cur in zip(convs, convs[1:]):
        assert cur.p * prev.q - prev.p * cur.q == (-1) ** (cur.k - 1)
        if cur.k >= 2:
            assert cur.q > prev.q


@pytest.mark.parametrize("quotients,k,expected", [
    ((0, 3, 4), 1, Fraction(4)),
    ((0, 1, 1, 3), 1, Fraction(4, 3)),
    ((0, 1, 1, 3), 2, Fraction(3)),
    ((0, 3, 4), 0, Fraction(13, 4)),
])
def test_complete_quotient(quotients, k, expected):
    assert complete_quotient(CFExpansion(quotients), k) == expected


@pytest.mark.parametrize("k", [-1, 2, 5])
def test_complete_quotient_out_of_range(k):
    with pytest.raises(IndexError):
        complete_quotient(CFExpansion((0, 3, 4)), k)


def test_error_term_examples():
    et = error_term(Fraction(4, 13), 1)
    assert et.r == Fraction(1, 39)
    assert et.q * (et.complete_quotient * et.q + et.q_prev) == 39
    et = error_term(Fraction(4, 7), 1)
    assert et.r == Fraction(3, 7)
    assert 1 / (et.q * (et.complete_quotient * et.q + et.q_prev)) == Fraction(3, 7)
    last = error_term(Fraction(4, 7), 3)
    assert last.r == 0 and last.complete_quotient is None
    with pytest.raises(IndexError):
        error_term(Fraction(4, 7), 4)


@given(nonneg)
def test_error_identity(r):
    cf = cf_expand(r)
    for k in range(cf.length + 1):
        et = error_term(r, k)
        assert (et.r == 0) == (k == cf.length)
        if k < cf.length:
            assert et.identity_product() == 1


@pytest.mark.parametrize("target,cand,expected", [
    (Fraction(4, 7), Fraction(1, 2), (True, True)),
    (Fraction(4, 5), Fraction(3, 4), (False, False)),
    (Fraction(4, 5), Fraction(4, 5), (True, True)),
    (Fraction(4, 13), Fraction(1, 3), (True, True)),
])
def test_legendre_examples(target, cand, expected):
    assert legendre_check(target, cand) == expected


def test_legendre_boundary_is_not_strict_pass():
    # |1/2 - 0/1| = 1/2 = 1/(2*1^2): equality does not count
    holds, _ = legendre_check(Fraction(1, 2), Fraction(0))
    assert holds is False


@given(st.integers(1, 10**4), st.integers(1, 10**4), st.integers(1, 1000), st.integers(-2, 2))
def test_legendre_soundness(m, n, s, shift):
    target = Fraction(m, n)
    cand = Fraction(round(target * s) + shift, s)
    if cand < 0:
        return
    holds, is_conv = legendre_check(target, cand)
    assert holds == (abs(target - cand) < Fraction(1, 2 * cand.denominator ** 2))
    assert is_conv == (cand in truncation_values(euclid_quotients(m, n)))
    if holds:
        assert is_conv


@pytest.mark.parametrize("p,quotients,values", [
    (13, (0, 3, 4), ["0", "1/3", "4/13"]),
    (7, (0, 1, 1, 3), ["0", "1", "1/2", "4/7"]),
    (5, (0, 1, 4), ["0", "1", "4/5"]),
])
def test_closed_form_examples(p, quotients, values):
    exp, vals = four_over_p_closed_form(p)
    assert exp.quotients == quotients
    assert vals == [Fraction(v) for v in values]


@pytest.mark.parametrize("p", [4, 3, 2, 9, 15, 0, -7])
def test_closed_form_rejects(p):
    with pytest.raises(ValueError):
        four_over_p_closed_form(p)


def test_closed_form_agrees_with_expansion():
    for p in sieve_primes(10**4):
        if p < 5:
            continue
        exp, vals = four_over_p_closed_form(p)
        cf = cf_expand(Fraction(4, p))
        assert exp == cf
        assert vals == [c.value for c in convergents(cf)]
