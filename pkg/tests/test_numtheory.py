"""Divisor sums, the 7-adic split, and the d/e coefficient sequences."""

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qbell.numtheory import (
    SevenAdicSplit,
    d_coefficient,
    e_coefficient,
    seven_adic_split,
    sigma,
    sigma_ratio,
)


def sigma_by_scan(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def d_by_branch(n: int) -> Fraction:
    value = 4 * Fraction(sigma(n), n)
    if n % 7 == 0:
        value -= 3 * Fraction(sigma(n // 7), n // 7)
    return value


def e_by_branch(n: int) -> Fraction:
    value = 8 * Fraction(sigma(n), n)
    if n % 7 == 0:
        value -= 7 * Fraction(sigma(n // 7), n // 7)
    return value


# -- sigma -------------------------------------------------------------------


@pytest.mark.parametrize(
    "n, expected",
    [(1, 1), (6, 12), (12, 28), (28, 56), (49, 57), (100, 217), (720, 2418), (5040, 19344)],
)
def test_sigma_known_values(n, expected):
    assert sigma(n) == expected


def test_sigma_matches_divisor_scan():
    for n in range(1, 300):
        assert sigma(n) == sigma_by_scan(n)


def test_sigma_of_prime_is_prime_plus_one():
    for p in (2, 3, 5, 7, 11, 13, 97, 997):
        assert sigma(p) == p + 1


@pytest.mark.parametrize("bad", [0, -1, -12])
def test_sigma_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        sigma(bad)


@given(a=st.integers(min_value=1, max_value=1000), b=st.integers(min_value=1, max_value=1000))
def test_sigma_multiplicative_on_coprime_pairs(a, b):
    assume(math.gcd(a, b) == 1)
    assert sigma(a * b) == sigma(a) * sigma(b)


# -- 7-adic split ------------------------------------------------------------


def test_seven_adic_split_known_values():
    assert seven_adic_split(12) == SevenAdicSplit(0, 12)
    assert seven_adic_split(7) == SevenAdicSplit(1, 1)
    assert seven_adic_split(98) == SevenAdicSplit(2, 2)
    assert seven_adic_split(343) == SevenAdicSplit(3, 1)


@given(n=st.integers(min_value=1, max_value=10**9))
def test_seven_adic_split_round_trip(n):
    split = seven_adic_split(n)
    assert split.coprime % 7 != 0
    assert 7**split.exponent * split.coprime == n
    assert split.value == n


def test_seven_adic_split_rejects_nonpositive():
    with pytest.raises(ValueError):
        seven_adic_split(0)


# -- sigma ratio under division by 7 -----------------------------------------


def test_sigma_ratio_known_values():
    assert sigma_ratio(7) == 8
    assert sigma_ratio(49) == Fraction(57, 8)
    assert sigma_ratio(343) == Fraction(400, 57)


def test_sigma_ratio_equals_quotient_of_sigmas():
    for n in range(7, 2000, 7):
        assert sigma_ratio(n) == Fraction(sigma(n), sigma(n // 7))


def test_sigma_quotient_integer_identity():
    # sigma(n) * (7^m - 1) == (7^(m+1) - 1) * sigma(n/7) whenever 7 | n
    for n in range(7, 5000, 7):
        m = seven_adic_split(n).exponent
        assert sigma(n) * (7**m - 1) == (7 ** (m + 1) - 1) * sigma(n // 7)


@pytest.mark.parametrize("bad", [0, -7, 6, 13])
def test_sigma_ratio_rejects_non_multiples_of_seven(bad):
    with pytest.raises(ValueError):
        sigma_ratio(bad)


# -- d and e sequences -------------------------------------------------------


def test_d_coefficient_known_values():
    assert [d_coefficient(i) for i in range(1, 8)] == [
        Fraction(4),
        Fraction(6),
        Fraction(16, 3),
        Fraction(7),
        Fraction(24, 5),
        Fraction(8),
        Fraction(11, 7),
    ]
    assert d_coefficient(20) == Fraction(42, 5)
    assert d_coefficient(49) == Fraction(60, 49)


def test_e_coefficient_known_values():
    assert [e_coefficient(i) for i in range(1, 8)] == [
        Fraction(8),
        Fraction(12),
        Fraction(32, 3),
        Fraction(14),
        Fraction(48, 5),
        Fraction(16),
        Fraction(15, 7),
    ]
    assert e_coefficient(14) == Fraction(45, 14)


def test_closed_forms_agree_with_branch_forms():
    for n in range(1, 400):
        assert d_coefficient(n) == d_by_branch(n)
        assert e_coefficient(n) == e_by_branch(n)


def test_e_is_double_d_away_from_multiples_of_seven():
    for n in range(1, 200):
        if n % 7 != 0:
            assert e_coefficient(n) == 2 * d_coefficient(n)


@pytest.mark.parametrize("func", [d_coefficient, e_coefficient])
def test_coefficient_rejects_nonpositive(func):
    with pytest.raises(ValueError):
        func(0)
    with pytest.raises(ValueError):
        func(-3)
