"""Command-line front end.

Scalar subcommands print exactly one value on stdout; ``series`` prints one
coefficient per line; ``verify`` prints a JSON report and exits 0 only when
every check passed.  Diagnostics go to stderr, output is byte-identical
across runs.

Exit codes: 0 success or verified, 1 a verification entry failed, 2 usage
or parse error, 3 precondition violation.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import identity, series
from .bell import complete_bell
from .numtheory import d_coefficient, e_coefficient, sigma
from .partitions import partition_count
from .reports import format_exact

__all__ = ["main", "entry", "build_parser", "parse_rational"]

_RATIONAL_SYNTAX = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "num" or "num/den" with an optional sign; no decimal points."""
    if not _RATIONAL_SYNTAX.match(text):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbell",
        description="Exact Bell polynomials, partition counts, divisor sums, "
        "and truncated q-series, with identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="print p(n)")
    p.add_argument("n", type=int)

    p = sub.add_parser("sigma", help="print the sum of divisors of n")
    p.add_argument("n", type=int)

    p = sub.add_parser("coeff", help="print the coefficient d_n or e_n")
    p.add_argument("which", choices=("d", "e"))
    p.add_argument("n", type=int)

    p = sub.add_parser(
        "bell",
        help="print the complete Bell polynomial B_n(x1, ..., xn)",
        description="Arguments are exact rationals, written num or num/den.",
    )
    p.add_argument("n", type=int)
    p.add_argument("xs", nargs=argparse.REMAINDER, metavar="x")

    p = sub.add_parser(
        "series", help="print a truncated series, one coefficient per line"
    )
    p.add_argument("which", choices=("euler", "G", "H"))
    p.add_argument("--order", type=int, required=True)

    v = sub.add_parser("verify", help="run a verification report (JSON on stdout)")
    vsub = v.add_subparsers(dest="target", required=True)

    q = vsub.add_parser("theorem", help="Bell-polynomial identity for n! p(7n+5)")
    q.add_argument("--max-n", type=int, required=True, dest="max_n")

    q = vsub.add_parser("eq2", help="series identity for p(5k+4)")
    q.add_argument("--order", type=int, required=True)

    q = vsub.add_parser("eq3", help="series identity for p(7n+5)")
    q.add_argument("--order", type=int, required=True)

    q = vsub.add_parser("congruences", help="p(5k+4), p(7k+5), p(11k+6) divisibility")
    q.add_argument("--max-k", type=int, required=True, dest="max_k")

    q = vsub.add_parser("all", help="every verification at full scale")
    q.add_argument("--max-n", type=int, default=64, dest="max_n")
    q.add_argument("--order", type=int, default=200)
    q.add_argument("--max-k", type=int, default=1000, dest="max_k")

    return parser


def _cmd_bell(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if len(args.xs) != args.n:
        parser.error(f"bell {args.n} takes exactly {args.n} argument(s), got {len(args.xs)}")
    try:
        xs = [parse_rational(text) for text in args.xs]
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    print(format_exact(complete_bell(args.n, xs)))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    if args.which == "euler":
        s = series.euler_product(args.order)
    elif args.which == "G":
        s = series.series_g(args.order)
    else:
        s = series.series_h(args.order)
    for line in series.coefficient_lines(s):
        print(line)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.target == "theorem":
        reports = [identity.verify_theorem(args.max_n)]
    elif args.target == "eq2":
        reports = [series.verify_p5k4_identity(args.order)]
    elif args.target == "eq3":
        reports = [series.verify_p7n5_identity(args.order)]
    elif args.target == "congruences":
        reports = [identity.verify_congruences(args.max_k)]
    else:  # all
        reports = [
            identity.verify_theorem(args.max_n),
            series.verify_p5k4_identity(args.order),
            series.verify_p7n5_identity(args.order),
            identity.verify_congruences(args.max_k),
        ]
    if len(reports) == 1:
        payload = reports[0].to_json_dict()
    else:
        payload = [report.to_json_dict() for report in reports]
    print(json.dumps(payload, indent=2))
    return 0 if all(report.overall_pass for report in reports) else 1


def main(argv=None) -> int:
    """Run one invocation; returns the process exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "partition":
            print(partition_count(args.n))
        elif args.command == "sigma":
            print(sigma(args.n))
        elif args.command == "coeff":
            value = d_coefficient(args.n) if args.which == "d" else e_coefficient(args.n)
            print(format_exact(value))
        elif args.command == "bell":
            return _cmd_bell(parser, args)
        elif args.command == "series":
            return _cmd_series(args)
        else:
            return _cmd_verify(args)
        return 0
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else 2
    except argparse.ArgumentTypeError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    entry()
