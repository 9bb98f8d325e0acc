"""``reals`` command line: evaluate expressions, run verification suites, show periods."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .arithmetic import ResolutionBudget
from .errors import RealsError, UnresolvedPrecision
from .expr import ParseError, RenderConfig, run
from .rational import detect_period
from .stream import LookaheadPolicy
from .verify import SUITES, run_suite

EXIT_OK, EXIT_EVAL, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"not a rational: {text!r}") from e


def _period(text: str) -> int:
    try:
        r = _parse_rational(text)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    print(detect_period(r))
    return EXIT_OK


def _eval(args: argparse.Namespace) -> int:
    policy = LookaheadPolicy(args.lookahead, args.on_unresolved)
    budget = ResolutionBudget(policy)
    config = RenderConfig(args.digits, args.format)
    try:
        print(run(args.expr, config, budget))
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        if e.position is not None:
            print(f"  {args.expr}\n  {' ' * e.position}^", file=sys.stderr)
        return EXIT_PARSE
    except UnresolvedPrecision as e:
        enc = e.enclosure
        print(f"unresolved: {e}", file=sys.stderr)
        print(f"  value in [{float(enc.lo)!r}, {float(enc.hi)!r}] (exact: [{enc.lo}, {enc.hi}])", file=sys.stderr)
        return EXIT_EVAL
    except RealsError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EVAL
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    if args.suite == "period" and args.value is not None:
        return _period(args.value)
    if args.value is not None:
        print(f"error: suite {args.suite} takes no argument", file=sys.stderr)
        return EXIT_PARSE
    trials = args.trials if args.trials is not None else (500 if args.suite == "period" else 100)
    report = run_suite(args.suite, trials, args.precision, args.seed)
    status = "pass" if report.passed else "FAIL"
    print(f"{report.suite}: {status} ({trials} trials, precision {args.precision}, seed {args.seed})")
    for law, r in report.laws.items():
        print(f"  {law}: {'pass' if r.passed else 'FAIL'} (max deviation {r.max_deviation}, failures {r.failures})")
    print()
    for key, value in report.as_pairs():
        print(f"{key}={value}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reals", description="Exact real arithmetic on decimal digit streams.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("expr")
    ev.add_argument("--digits", type=int, default=20, help="fractional digits to print (default 20)")
    ev.add_argument("--lookahead", type=int, default=40, help="extra operand digits to try (default 40)")
    ev.add_argument("--format", choices=("sign", "floor"), default="sign")
    ev.add_argument("--on-unresolved", choices=("error", "interval"), default="error")

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("suite", choices=SUITES)
    ve.add_argument("value", nargs="?", help="for the period suite: a single rational p/q to expand")
    ve.add_argument("--trials", type=int, default=None)
    ve.add_argument("--precision", type=int, default=15)
    ve.add_argument("--seed", type=int, default=0)

    pe = sub.add_parser("period", help="print the periodic expansion of p/q")
    pe.add_argument("value")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "eval":
        if args.digits < 0 or args.lookahead < 0:
            print("error: --digits and --lookahead must be non-negative", file=sys.stderr)
            return EXIT_PARSE
        return _eval(args)
    if args.command == "verify":
        return _verify(args)
    return _period(args.value)


if __name__ == "__main__":
    sys.exit(main())
