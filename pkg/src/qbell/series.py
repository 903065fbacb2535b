"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` represents a power series modulo x^(K+1) as a
dense tuple of K+1 fractions.  Arithmetic between two series truncates to
the smaller order and never extrapolates; every constructor and method
states the order of what it returns.  Values are immutable, so concurrent
use needs no coordination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .partitions import partition_count
from .reports import CheckEntry, VerificationReport, format_exact

__all__ = [
    "TruncatedSeries",
    "euler_product",
    "series_g",
    "series_h",
    "extract_log_coefficients",
    "verify_p7n5_identity",
    "verify_p5k4_identity",
    "coefficient_lines",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class TruncatedSeries:
    """Exact power series modulo x^(order+1)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = (), order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit order")
        else:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(coeffs) > order + 1:
                del coeffs[order + 1:]
            else:
                coeffs.extend([_ZERO] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls((_ONE,), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient=1) -> TruncatedSeries:
        """coefficient * x^exponent at the given order (zero if exponent > order)."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        if exponent > order:
            return cls.zero(order)
        return cls([_ZERO] * exponent + [Fraction(coefficient)], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, exponent: int) -> Fraction:
        if not 0 <= exponent <= self.order:
            raise IndexError(f"exponent {exponent} outside 0..{self.order}")
        return self._coeffs[exponent]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"TruncatedSeries(order={self.order}, [{shown}])"

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            k = min(self.order, other.order)
            return TruncatedSeries(
                [self._coeffs[i] + other._coeffs[i] for i in range(k + 1)]
            )
        if isinstance(other, (int, Fraction)):
            coeffs = list(self._coeffs)
            coeffs[0] += other
            return TruncatedSeries(coeffs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            k = min(self.order, other.order)
            return TruncatedSeries(
                [self._coeffs[i] - other._coeffs[i] for i in range(k + 1)]
            )
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        """Cauchy product, truncated to the smaller operand order."""
        if isinstance(other, TruncatedSeries):
            k = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = [_ZERO] * (k + 1)
            for i in range(k + 1):
                ai = a[i]
                if not ai:
                    continue
                for j in range(k + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
            return TruncatedSeries(out)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> TruncatedSeries:
        """Integer power by repeated squaring; negative powers go via inverse()."""
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- series-specific operations ---------------------------------------

    def inverse(self) -> TruncatedSeries:
        """t with self * t = 1 through x^order.

        Forward substitution: t_0 = 1/c_0 and
        t_n = -(sum_{i=1}^{n} c_i t_{n-i}) / c_0.
        """
        c = self._coeffs
        if not c[0]:
            raise ValueError("series with zero constant term has no inverse")
        support = [i for i in range(1, len(c)) if c[i]]
        out = [_ZERO] * len(c)
        out[0] = 1 / c[0]
        for n in range(1, len(c)):
            acc = _ZERO
            for i in support:
                if i > n:
                    break
                acc += c[i] * out[n - i]
            out[n] = -acc / c[0]
        return TruncatedSeries(out)

    def substitute_power(self, r: int) -> TruncatedSeries:
        """self(x^r) at the same order: coefficient of x^(r*i) is c_i."""
        if r < 1:
            raise ValueError("substitution power must be >= 1")
        k = self.order
        out = [_ZERO] * (k + 1)
        for i, c in enumerate(self._coeffs):
            if r * i > k:
                break
            out[r * i] = c
        return TruncatedSeries(out)

    def log(self) -> TruncatedSeries:
        """ln(self), requiring constant term exactly 1.

        Differential recurrence (from L' * self = self'):
            n L_n = n c_n - sum_{i=1}^{n-1} i L_i c_{n-i};
        the division by n is exact over the rationals.
        """
        c = self._coeffs
        if c[0] != 1:
            raise ValueError("log needs constant term exactly 1")
        out = [_ZERO] * len(c)
        for n in range(1, len(c)):
            acc = n * c[n]
            for i in range(1, n):
                if c[n - i]:
                    acc -= i * out[i] * c[n - i]
            out[n] = acc / n
        return TruncatedSeries(out)

    def exp(self) -> TruncatedSeries:
        """exp(self), requiring constant term 0: n E_n = sum_i i c_i E_{n-i}."""
        c = self._coeffs
        if c[0] != 0:
            raise ValueError("exp needs constant term 0")
        support = [i for i in range(1, len(c)) if c[i]]
        out = [_ZERO] * len(c)
        out[0] = _ONE
        for n in range(1, len(c)):
            acc = _ZERO
            for i in support:
                if i > n:
                    break
                acc += i * c[i] * out[n - i]
            out[n] = acc / n
        return TruncatedSeries(out)


# -- named products -------------------------------------------------------


def euler_product(order: int) -> TruncatedSeries:
    """(x;x)_inf = prod_{k>=1} (1 - x^k), exact through x^order.

    Built from the sparse pentagonal-number expansion
        1 + sum_{k>=1} (-1)^k (x^{k(3k-1)/2} + x^{k(3k+1)/2}).
    Factors (1 - x^j) with j > order cannot touch coefficients <= order, so
    the truncation at x^order is exact.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [_ZERO] * (order + 1)
    coeffs[0] = _ONE
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > order:
            break
        sign = Fraction(-1 if k % 2 else 1)
        coeffs[g] = sign
        g += k  # k(3k+1)/2
        if g <= order:
            coeffs[g] = sign
        k += 1
    return TruncatedSeries(coeffs)


def series_g(order: int) -> TruncatedSeries:
    """G(x) = 7 (x^7;x^7)_inf^3 / (x;x)_inf^4 through x^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    e1 = euler_product(order)
    e7 = e1.substitute_power(7)
    return 7 * (e7 ** 3) * (e1 ** -4)


def series_h(order: int) -> TruncatedSeries:
    """H(x) = 49 x (x^7;x^7)_inf^7 / (x;x)_inf^8 through x^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    e1 = euler_product(order)
    e7 = e1.substitute_power(7)
    return TruncatedSeries.monomial(1, order, 49) * (e7 ** 7) * (e1 ** -8)


def extract_log_coefficients(which: str, order: int) -> list[Fraction]:
    """Coefficients 1..order of ln(G(x)/7) or of ln(H(x)/(49x)).

    Dividing G by 7, and H by 49x (drop the zero constant, shift every
    exponent down one, divide by 49), removes the constants whose logs are
    not rational, leaving series with constant term 1 whose logs live
    entirely in the rationals.  The returned lists are the d and e
    coefficient sequences of qbell.numtheory.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if which == "G":
        normalized = series_g(order) / 7
    elif which == "H":
        h = series_h(order + 1)
        normalized = TruncatedSeries([c / 49 for c in h.coefficients[1:]])
    else:
        raise ValueError("which must be 'G' or 'H'")
    return list(normalized.log().coefficients[1 : order + 1])


# -- coefficient-level verification ----------------------------------------


def verify_p7n5_identity(order: int) -> VerificationReport:
    """Check that coefficient n of G + H equals p(7n+5) for 0 <= n <= order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    combined = series_g(order) + series_h(order)
    entries = []
    for n in range(order + 1):
        computed = combined[n]
        expected = Fraction(partition_count(7 * n + 5))
        entries.append(CheckEntry(n, computed, expected, computed == expected))
    return VerificationReport("p7n5-series", tuple(entries))


def verify_p5k4_identity(order: int) -> VerificationReport:
    """Check that coefficient k of 5 (x^5;x^5)_inf^5 / (x;x)_inf^6 equals p(5k+4)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    e1 = euler_product(order)
    s = 5 * (e1.substitute_power(5) ** 5) * (e1 ** -6)
    entries = []
    for k in range(order + 1):
        computed = s[k]
        expected = Fraction(partition_count(5 * k + 4))
        entries.append(CheckEntry(k, computed, expected, computed == expected))
    return VerificationReport("p5k4-series", tuple(entries))


def coefficient_lines(series: TruncatedSeries) -> list[str]:
    """One line per coefficient: "index<TAB>num/den", "/den" omitted when 1."""
    return [f"{i}\t{format_exact(c)}" for i, c in enumerate(series.coefficients)]
