"""Partial and complete exponential Bell polynomials over exact rationals.

Arguments are passed as plain sequences; ``args[i - 1]`` holds the formula
variable x_i, so all docstrings below speak in 1-based indices.
"""

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "partial_bell",
    "partial_bell_by_enumeration",
    "complete_bell",
    "complete_bell_sequence",
    "ENUMERATION_LIMIT",
]


def _as_fractions(args: Sequence) -> list[Fraction]:
    return [Fraction(a) for a in args]


def partial_bell(n: int, k: int, args: Sequence) -> Fraction:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).

    Computed by the recurrence
        B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}
    with B_{0,0} = 1 and B_{m,0} = 0 for m >= 1.
    """
    if k < 1 or k > n:
        raise ValueError("partial_bell requires 1 <= k <= n")
    xs = _as_fractions(args)
    if len(xs) < n - k + 1:
        raise ValueError(f"need x_1..x_{n - k + 1}, got {len(xs)} arguments")
    # Only cells with m - j <= n - k can feed B_{n,k}; restricting to them
    # also keeps every x index within the n-k+1 arguments supplied.
    table = [[Fraction(0)] * (k + 1) for _ in range(n + 1)]
    table[0][0] = Fraction(1)
    for j in range(1, k + 1):
        for m in range(j, n - k + j + 1):
            acc = Fraction(0)
            for i in range(1, m - j + 2):
                x = xs[i - 1]
                if x:
                    acc += comb(m - 1, i - 1) * x * table[m - i][j - 1]
            table[m][j] = acc
    return table[n][k]


ENUMERATION_LIMIT = 20


def partial_bell_by_enumeration(n: int, k: int, args: Sequence) -> Fraction:
    """B_{n,k} straight from the definition.

    Sums n!/(j_1! ... j_{n-k+1}!) * prod_i (x_i/i!)^{j_i} over every index
    tuple (j_1, ..., j_{n-k+1}) with sum j_i = k and sum i*j_i = n.  The
    tuple enumeration is exponential, hence the n <= 20 guard; this path
    exists as an oracle for the recurrence above.
    """
    if k < 1 or k > n:
        raise ValueError("partial_bell_by_enumeration requires 1 <= k <= n")
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"definitional enumeration is guarded to n <= {ENUMERATION_LIMIT}")
    xs = _as_fractions(args)
    width = n - k + 1
    if len(xs) < width:
        raise ValueError(f"need x_1..x_{width}, got {len(xs)} arguments")
    total = Fraction(0)
    for tup in _index_tuples(width, k, n, 1):
        weight = Fraction(factorial(n))
        for i, j in enumerate(tup, start=1):
            if j:
                weight *= Fraction(xs[i - 1], factorial(i)) ** j / factorial(j)
        total += weight
    return total


def _index_tuples(width: int, parts: int, weight: int, position: int) -> Iterator[tuple]:
    # tuples (j_position, ...) of given width with sum j = parts and
    # sum i*j_i = weight; lexicographic in j_position
    if width == 0:
        if parts == 0 and weight == 0:
            yield ()
        return
    for j in range(min(parts, weight // position) + 1):
        for rest in _index_tuples(width - 1, parts - j, weight - position * j, position + 1):
            yield (j,) + rest


def complete_bell(n: int, args: Sequence) -> Fraction:
    """Complete Bell polynomial B_n(x_1, ..., x_n), with B_0 = 1.

    Equals sum_{k=1}^{n} B_{n,k}; computed by the single recurrence
        B_{m+1} = sum_{j=0}^{m} C(m, j) x_{j+1} B_{m-j}.
    """
    return complete_bell_sequence(n, args)[n]


def complete_bell_sequence(n: int, args: Sequence) -> list[Fraction]:
    """[B_0, B_1, ..., B_n] for the given arguments, in one O(n^2) pass."""
    if n < 0:
        raise ValueError("complete_bell is defined for n >= 0")
    xs = _as_fractions(args)
    if len(xs) < n:
        raise ValueError(f"need x_1..x_{n}, got {len(xs)} arguments")
    seq = [Fraction(1)]
    for m in range(n):
        acc = Fraction(0)
        for j in range(m + 1):
            x = xs[j]
            if x:
                acc += comb(m, j) * x * seq[m - j]
        seq.append(acc)
    return seq
