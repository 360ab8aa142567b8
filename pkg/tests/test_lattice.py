from decimal import Decimal
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from eslab.lattice import (asymptotic_report, coprime_pairs_under, coprime_pairs_under_brute,
                           count_lattice_brute, count_lattice_sliced, decimal_str,
                           divisor_summatory, threshold, totient_constant_report,
                           totient_sieve, totient_summatory)
from oracles import sieve_primes, totient_by_gcd


def test_sieve_small():
    assert totient_sieve(1).values() == [1]
    t = totient_sieve(12)
    assert t[12] == 4 and t[7] == 6 and t[1] == 1


def test_sieve_rejects_zero():
    with pytest.raises(ValueError):
        totient_sieve(0)


def test_sieve_matches_gcd_count():
    t = totient_sieve(2000)
    assert t.values() == [totient_by_gcd(n) for n in range(1, 2001)]


def test_sieve_primes_and_multiplicativity():
    t = totient_sieve(10**4)
    for p in sieve_primes(10**4):
        assert t[p] == p - 1
    for m, n in [(4, 9), (7, 15), (16, 25), (11, 91), (8, 125)]:
        assert gcd(m, n) == 1 and t[m * n] == t[m] * t[n]


@pytest.mark.parametrize("X,expected", [(1, 1), (10, 32), (100, 3044)])
def test_totient_summatory(X, expected):
    # 3044 = sum of the gcd-count totients below
    assert expected == sum(totient_by_gcd(n) for n in range(1, X + 1))
    assert totient_summatory(X) == expected


def test_constant_report_fields():
    rep = totient_constant_report(1000)
    assert rep["Phi"] == totient_summatory(1000)
    assert abs(rep["normalised_by_3_over_pi2"] - 1) < 0.01
    assert abs(rep["normalised_by_6_over_pi2"] - 0.5) < 0.01


@pytest.mark.parametrize("z,expected", [(1, 0), (8, 1), (9, 2), (2, 0), (3, 1), (50, 4), (51, 5)])
def test_threshold_examples(z, expected):
    assert threshold(z) == expected


def test_threshold_exhaustive():
    for z in range(1, 10**4 + 1):
        b = threshold(z)
        assert 2 * b * b < z <= 2 * (b + 1) ** 2


def test_divisor_summatory():
    for t in range(0, 300):
        assert divisor_summatory(t) == sum(t // k for k in range(1, t + 1))


def test_slice_formula_per_z():
    for z in range(1, 501):
        b = threshold(z)
        direct = sum(1 for x in range(1, z + 1) for y in range(1, z + 1)
                     if x * y <= b and gcd(x, y) == 1) if b else 0
        assert coprime_pairs_under(b) == coprime_pairs_under_brute(b) == direct


@given(st.integers(0, 3000))
def test_coprime_pairs_moebius(m):
    assert coprime_pairs_under(m) == coprime_pairs_under_brute(m)


@pytest.mark.parametrize("N,expected", [(2, 0), (3, 1), (10, 12), (50, 232)])
def test_lattice_examples(N, expected):
    assert count_lattice_brute(N).a_N == expected
    assert count_lattice_sliced(N).a_N == expected


def test_lattice_ten_by_hand():
    # z = 3..8 give 1 pair, z = 9, 10 give 3 pairs
    assert 6 * 1 + 2 * 3 == count_lattice_sliced(10).a_N


def test_lattice_rejects_zero():
    with pytest.raises(ValueError):
        count_lattice_sliced(0)
    with pytest.raises(ValueError):
        count_lattice_brute(0)


def test_methods_agree_sample():
    for N in list(range(1, 120)) + [250, 499, 500]:
        assert count_lattice_brute(N).a_N == count_lattice_sliced(N).a_N


def test_a_n_nondecreasing():
    vals = [count_lattice_sliced(N).a_N for N in range(1, 2001)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_report_ratios():
    rep = count_lattice_sliced(10)
    assert rep.ratio_lower == Fraction(6, 5)
    assert rep.row()["a_N_over_N"] == "1.20000000000000000000"
    assert rep.ratio_upper == Decimal("0.03794733192202055198")  # 12 / 10^(5/2)
    assert count_lattice_sliced(2).ratio_lower == 0
    assert count_lattice_sliced(100).ratio_upper == Decimal("0.00798")


def test_decimal_str():
    assert decimal_str(Fraction(1, 3)) == "0.33333333333333333333"
    assert decimal_str(Fraction(2, 3), 3) == "0.667"


def test_asymptotic_report_monotone():
    reps = asymptotic_report([100, 200, 400])
    assert [r.a_N for r in reps] == sorted(r.a_N for r in reps)
    with pytest.raises(ValueError):
        asymptotic_report([200, 100])
