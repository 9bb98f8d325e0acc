"""Seeded verification suites behind ``reals verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .arithmetic import add, mul, reciprocal
from .errors import UnresolvedPrecision
from .iso import LawResult, iso_report
from .limits import sup_finite
from .rational import detect_period, from_periodic, long_division_truncate
from .stream import (
    DecimalStream,
    Verdict,
    _scaled_range,
    compare_upto,
    from_periodic_digits,
    from_rational,
    psi,
    sqrt_stream,
    truncation_gap,
)

SUITES = ("axioms", "iso-dedekind", "iso-cauchy", "period")


@dataclass
class SuiteReport:
    suite: str
    trials: int
    precision: int
    seed: int
    laws: dict[str, LawResult] = field(default_factory=dict)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.laws.values())

    def record(self, law: str, deviation: int, ok: bool) -> None:
        r = self.laws.setdefault(law, LawResult())
        r.max_deviation = max(r.max_deviation, deviation)
        if not ok:
            r.passed = False
            r.failures += 1

    def as_pairs(self) -> list[tuple[str, str]]:
        pairs = [
            ("suite", self.suite),
            ("trials", str(self.trials)),
            ("precision", str(self.precision)),
            ("seed", str(self.seed)),
        ]
        for law, r in self.laws.items():
            pairs.append((f"{law}.max_deviation", str(r.max_deviation)))
            pairs.append((f"{law}.pass", str(r.passed).lower()))
        pairs.append(("skipped", str(self.skipped)))
        pairs.append(("result", "pass" if self.passed else "fail"))
        return pairs


@dataclass(frozen=True)
class _Operand:
    stream: DecimalStream
    bound: int  # an integer strictly above |x|


def _random_operand(rng: random.Random) -> _Operand:
    roll = rng.random()
    q = rng.randint(1, 30)
    r = Fraction(rng.randint(-6 * q, 6 * q), q)
    bound = abs(r.numerator) // r.denominator + 1
    if roll < 0.5:
        return _Operand(from_rational(r), bound)
    if roll < 0.75:
        # same value, but only reachable through its digits
        return _Operand(from_periodic_digits(detect_period(r)), bound)
    n = rng.randint(2, 50)
    s = sqrt_stream(n)
    return _Operand(psi(s) if rng.random() < 0.5 else s, isqrt(n) + 2)


def _witness(x: DecimalStream, limit: int = 12) -> int | None:
    """Smallest m <= limit with [|x|]_m >= 1."""
    for m in range(limit + 1):
        t = x.query(m).scaled
        if t >= 1 or t <= -2:
            return m
    return None


def axioms_report(trials: int = 200, k: int = 15, seed: int = 0) -> SuiteReport:
    """Ordered field laws, each at the tolerance its proof allows.

    Operands mix rationals with exact values, the same rationals as bare
    digit streams, and square roots. A law whose operands sit on a grid
    point that the lookahead cannot settle is counted as skipped.
    """
    rng = random.Random(seed)
    report = SuiteReport("axioms", trials, k, seed)
    zero, one = from_rational(0), from_rational(1)
    s = min(k, 20)
    for _ in range(trials):
        ox, oy, oz = (_random_operand(rng) for _ in range(3))
        x, y, z = ox.stream, oy.stream, oz.stream
        big_m = max(ox.bound, oy.bound, oz.bound)
        checks = [
            ("add_commutative", lambda: (add(x, y), add(y, x)), 0, k),
            ("mul_commutative", lambda: (mul(x, y), mul(y, x)), 0, k),
            ("add_associative", lambda: (add(add(x, y), z), add(x, add(y, z))), 3, k),
            ("distributive", lambda: (mul(x, add(y, z)), add(mul(x, y), mul(x, z))), 6 * big_m + 1, k),
            ("add_identity", lambda: (add(x, zero), x), 1, k),
            ("mul_identity", lambda: (mul(x, one), x), 1, k),
            ("add_inverse", lambda: (add(x, psi(x)), zero), 1, k),
            ("complement_involution", lambda: (psi(psi(x)), x), 0, k),
        ]
        w = _witness(x)
        if w is not None:
            checks.append(("mul_inverse", lambda: (mul(x, reciprocal(x, w)), one), 1, s))
        for law, build, tol, prec in checks:
            try:
                lhs, rhs = build()
                if tol == 0:
                    # exact laws: both sides must allow the very same truncations
                    same = _scaled_range(lhs, prec)[0] == _scaled_range(rhs, prec)[0]
                    gap = 0 if same else max(1, truncation_gap(lhs, rhs, prec))
                else:
                    gap = truncation_gap(lhs, rhs, prec)
            except UnresolvedPrecision:
                report.skipped += 1
                continue
            report.record(law, gap, gap <= tol)
        try:
            _order_laws(report, x, y, z, k)
        except UnresolvedPrecision:
            report.skipped += 1
    return report


def _order_laws(report: SuiteReport, x: DecimalStream, y: DecimalStream, z: DecimalStream, k: int) -> None:
    c = compare_upto(x, y, k)
    if c.verdict is Verdict.LESS:
        moved = compare_upto(add(x, z), add(y, z), k)
        report.record("order_add", 0, moved.verdict is not Verdict.GREATER)
    zero = from_rational(0)
    if compare_upto(zero, x, k).verdict is Verdict.LESS and compare_upto(zero, y, k).verdict is Verdict.LESS:
        report.record("order_mul", 0, compare_upto(zero, mul(x, y), k).verdict is not Verdict.GREATER)
    top = sup_finite([x, y])
    ok = max(x.query(k).scaled, y.query(k).scaled) == top.query(k).scaled
    report.record("sup_is_max", 0, ok)


def period_report(trials: int = 500, seed: int = 0) -> SuiteReport:
    """Round trip through detected periods; no period may be all nines."""
    rng = random.Random(seed)
    report = SuiteReport("period", trials, 0, seed)
    for _ in range(trials):
        q = rng.randint(1, 500)
        r = Fraction(rng.randint(-10 * q, 10 * q), q)
        p = detect_period(r)
        report.record("round_trip", 0, from_periodic(p) == r)
        report.record("no_nines_period", 0, set(p.period) != {9})
        n = len(p.preperiod) + 2 * len(p.period)
        digits = long_division_truncate(r, n).digits
        report.record("digits_agree", 0, digits == [p.digit(i) for i in range(1, n + 1)])
    return report


def run_suite(name: str, trials: int, precision: int, seed: int) -> SuiteReport:
    if name == "axioms":
        return axioms_report(trials, precision, seed)
    if name == "period":
        return period_report(trials, seed)
    if name in ("iso-dedekind", "iso-cauchy"):
        iso = iso_report(name.split("-")[1], trials, precision, seed)
        report = SuiteReport(name, trials, precision, seed)
        report.laws = iso.laws
        return report
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")


__all__ = ["SUITES", "SuiteReport", "axioms_report", "period_report", "run_suite"]
