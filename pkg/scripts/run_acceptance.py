#!/usr/bin/env python3
"""Full verification sweep with per-stage timing.

Covers the same ground as tests/test_acceptance.py but as a plain script:
each stage prints one line with its wall time, and the process exits 0
only if every stage passes.
"""

import argparse
import math
import random
import sys
import time
from fractions import Fraction

from qbell.bell import complete_bell, partial_bell, partial_bell_by_enumeration
from qbell.identity import theorem_lhs, verify_congruences, verify_theorem
from qbell.numtheory import d_coefficient, e_coefficient, seven_adic_split, sigma
from qbell.partitions import BRUTE_LIMIT, partition_count, partition_count_brute
from qbell.series import (
    TruncatedSeries,
    extract_log_coefficients,
    verify_p5k4_identity,
    verify_p7n5_identity,
)


def stage(name):
    def wrap(func):
        func.stage_name = name
        return func

    return wrap


@stage("bell identity, n <= {max_n}")
def check_theorem(args):
    return verify_theorem(args.max_n).overall_pass


@stage("series vs partition counts, order {order}")
def check_p7n5(args):
    brute = all(
        partition_count(n) == partition_count_brute(n) for n in range(BRUTE_LIMIT + 1)
    )
    return brute and verify_p7n5_identity(args.order).overall_pass


@stage("companion series vs partition counts, order {order}")
def check_p5k4(args):
    return verify_p5k4_identity(args.order).overall_pass


@stage("congruence sweep, k <= {max_k}")
def check_congruences(args):
    return verify_congruences(args.max_k).overall_pass


@stage("log coefficients vs closed and branch forms")
def check_log_coefficients(args):
    if extract_log_coefficients("G", 100) != [d_coefficient(i) for i in range(1, 101)]:
        return False
    if extract_log_coefficients("H", 100) != [e_coefficient(i) for i in range(1, 101)]:
        return False
    for n in range(1, 10**4 + 1):
        d = 4 * Fraction(sigma(n), n)
        e = 8 * Fraction(sigma(n), n)
        if n % 7 == 0:
            d -= 3 * Fraction(sigma(n // 7), n // 7)
            e -= 7 * Fraction(sigma(n // 7), n // 7)
        if d != d_coefficient(n) or e != e_coefficient(n):
            return False
    return True


@stage("bell recurrence vs definitional sum and series exp")
def check_bell_routes(args):
    rng = random.Random(1729)
    for n in range(1, 13):
        for k in range(1, n + 1):
            xs = [
                Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for _ in range(n - k + 1)
            ]
            if partial_bell(n, k, xs) != partial_bell_by_enumeration(n, k, xs):
                return False
    xs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(25)]
    exponential = TruncatedSeries(
        [Fraction(0)] + [xs[m - 1] / math.factorial(m) for m in range(1, 26)]
    ).exp()
    return all(
        complete_bell(n, xs[:n]) == exponential[n] * math.factorial(n)
        for n in range(26)
    )


@stage("divisor-sum quotient identity and multiplicativity")
def check_sigma_identities(args):
    for n in range(7, 10**5 + 1, 7):
        m = seven_adic_split(n).exponent
        if sigma(n) * (7**m - 1) != (7 ** (m + 1) - 1) * sigma(n // 7):
            return False
    rng = random.Random(65537)
    checked = 0
    while checked < 500:
        a, b = rng.randint(1, 999), rng.randint(1, 999)
        if math.gcd(a, b) != 1:
            continue
        if sigma(a * b) != sigma(a) * sigma(b):
            return False
        checked += 1
    return True


@stage("integrality of the identity left side, n <= {max_n}")
def check_integrality(args):
    return all(theorem_lhs(n).denominator == 1 for n in range(1, args.max_n + 1))


STAGES = (
    check_theorem,
    check_p7n5,
    check_p5k4,
    check_congruences,
    check_log_coefficients,
    check_bell_routes,
    check_sigma_identities,
    check_integrality,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=64)
    parser.add_argument("--order", type=int, default=200)
    parser.add_argument("--max-k", type=int, default=1000)
    args = parser.parse_args()

    failures = 0
    total_start = time.perf_counter()
    for check in STAGES:
        label = check.stage_name.format(
            max_n=args.max_n, order=args.order, max_k=args.max_k
        )
        start = time.perf_counter()
        passed = check(args)
        elapsed = time.perf_counter() - start
        print(f"{'PASS' if passed else 'FAIL'}  {label}  ({elapsed:.2f}s)")
        failures += 0 if passed else 1
    total = time.perf_counter() - total_start
    print(f"{len(STAGES) - failures}/{len(STAGES)} stages passed in {total:.2f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
