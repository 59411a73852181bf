from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridshadow.errors import ResourceBudgetError
from gridshadow.numbers import (LN2_UPPER, finsler_bound, is_prime, primes_between, primes_in_dyadic_interval,
                                small_primes, two_adic_valuation)


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# counts frozen from trial division over each open interval (2^M, 2^(M+1))
@pytest.mark.parametrize("M, count", [(2, 2), (3, 2), (5, 7), (8, 43), (13, 872), (16, 5709)])
def test_dyadic_prime_counts(M, count, backend):
    assert len(primes_in_dyadic_interval(M)) == count


def test_small_intervals():
    assert primes_in_dyadic_interval(2).primes == (5, 7)
    assert primes_in_dyadic_interval(3).primes == (11, 13)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 16))
def test_interval_is_exactly_the_primes(M):
    listed = primes_in_dyadic_interval(M).primes
    assert list(listed) == sorted(listed)
    assert set(listed) == {k for k in range((1 << M) + 1, 1 << (M + 1)) if trial_division(k)}


def test_sieve_rejects_small_M_and_budget():
    with pytest.raises(ValueError):
        primes_in_dyadic_interval(1)
    with pytest.raises(ResourceBudgetError):
        primes_in_dyadic_interval(25)
    assert len(primes_in_dyadic_interval(6, budget=6)) > 0


@pytest.mark.parametrize("lo, hi", [(-5, 30), (0, 2), (1, 3), (97, 98), (1000, 1100)])
def test_primes_between_edges(lo, hi, backend):
    assert primes_between(lo, hi) == [k for k in range(lo + 1, hi) if trial_division(k)]


def test_small_primes():
    assert small_primes(1) == []
    assert small_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(-10, 200_000))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == trial_division(n)


def test_is_prime_large_known_values():
    assert is_prime(2 ** 61 - 1)
    assert not is_prime((2 ** 31 - 1) * (2 ** 40 + 15))
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    with pytest.raises(ValueError):
        is_prime(2 ** 89 - 1)


def test_finsler_bound_values():
    assert LN2_UPPER >= Fraction(693147, 1000000)
    assert finsler_bound(13) > 250
    assert finsler_bound(1) < 1
    assert finsler_bound(13) == Fraction(2 ** 13 * 10000, 3 * 14 * 6932)


def test_finsler_bound_is_monotone_and_certified():
    prev = Fraction(0)
    for M in range(1, 60):
        b = finsler_bound(M)
        assert b >= prev
        # ln 2 < 0.6932, so the bound is below 2^M / (3 (M+1) 0.693147)
        assert b < Fraction(2 ** M) / (3 * (M + 1) * Fraction(693147, 10 ** 6))
        prev = b
    with pytest.raises(ValueError):
        finsler_bound(0)


@pytest.mark.parametrize("M", range(5, 17))
def test_finsler_bound_below_prime_count(M):
    assert finsler_bound(M) <= len(primes_in_dyadic_interval(M))


@pytest.mark.parametrize("x, v", [(12, 2), (1, 0), (2 ** 40 * 7, 40), (-8, 3), (-3, 0)])
def test_two_adic_valuation(x, v):
    assert two_adic_valuation(x) == v


def test_two_adic_valuation_rejects_zero():
    with pytest.raises(ValueError):
        two_adic_valuation(0)


@given(st.integers(-10 ** 30, 10 ** 30), st.integers(1, 10 ** 30))
def test_rationals_reduce(p, q):
    r = Fraction(p, q)
    assert r.denominator >= 1
    from math import gcd
    assert gcd(abs(r.numerator), r.denominator) == 1
    assert r.numerator * q == p * r.denominator
