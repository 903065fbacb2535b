"""Divisor sums, 7-adic decomposition, and the d/e coefficient sequences.

Everything here is exact: naturals are plain Python integers, ratios are
``fractions.Fraction`` values (always stored reduced).
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import NamedTuple

__all__ = [
    "SevenAdicSplit",
    "sigma",
    "seven_adic_split",
    "sigma_ratio",
    "d_coefficient",
    "e_coefficient",
]


@lru_cache(maxsize=None)
def sigma(n: int) -> int:
    """Sum of all positive divisors of n, including 1 and n.

    Trial division up to sqrt(n); every caller in this library stays below
    ~10^5, so nothing more sophisticated is warranted.
    """
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
    return total


class SevenAdicSplit(NamedTuple):
    """Decomposition n = 7**exponent * coprime, with 7 not dividing coprime."""

    exponent: int
    coprime: int

    @property
    def value(self) -> int:
        return 7 ** self.exponent * self.coprime


def seven_adic_split(n: int) -> SevenAdicSplit:
    """Factor the largest power of 7 out of n >= 1."""
    if n < 1:
        raise ValueError("seven_adic_split is defined for n >= 1")
    m = 0
    while n % 7 == 0:
        n //= 7
        m += 1
    return SevenAdicSplit(m, n)


def sigma_ratio(n: int) -> Fraction:
    """The exact ratio sigma(n) / sigma(n // 7) for a positive multiple of 7.

    Equals (7^(m+1) - 1) / (7^m - 1) with m the 7-adic valuation of n.
    Multiplicativity of sigma over coprime factors makes the ratio depend on
    the power of 7 alone, never on the part of n coprime to 7.
    """
    if n < 1 or n % 7 != 0:
        raise ValueError("sigma_ratio requires a positive multiple of 7")
    m = seven_adic_split(n).exponent
    return Fraction(7 ** (m + 1) - 1, 7 ** m - 1)


def _sigma_over_n_scaled(n: int, bump: int) -> Fraction:
    m = seven_adic_split(n).exponent
    return Fraction(sigma(n), n) * (1 + Fraction(bump, 7 ** (m + 1) - 1))


def d_coefficient(n: int) -> Fraction:
    """Coefficient d_n in ln(G(x)/7) = sum_{n>=1} d_n x^n.

    G(x) = 7 (x^7;x^7)_inf^3 / (x;x)_inf^4.  Closed form
    (sigma(n)/n) * (1 + 18/(7^(m+1) - 1)) with m the 7-adic valuation of n;
    equivalently 4 sigma(n)/n, minus 3 sigma(n/7)/(n/7) when 7 | n.
    """
    if n < 1:
        raise ValueError("d_coefficient is defined for n >= 1")
    return _sigma_over_n_scaled(n, 18)


def e_coefficient(n: int) -> Fraction:
    """Coefficient e_n in ln(H(x)/(49x)) = sum_{n>=1} e_n x^n.

    H(x) = 49 x (x^7;x^7)_inf^7 / (x;x)_inf^8.  Closed form
    (sigma(n)/n) * (1 + 42/(7^(m+1) - 1)); equivalently 8 sigma(n)/n,
    minus 7 sigma(n/7)/(n/7) when 7 | n.
    """
    if n < 1:
        raise ValueError("e_coefficient is defined for n >= 1")
    return _sigma_over_n_scaled(n, 42)
