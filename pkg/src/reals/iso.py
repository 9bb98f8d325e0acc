"""Randomized checks that cuts and Cauchy sequences map homomorphically into streams.

Each trial draws two rationals, builds cuts or sequences for them, and
compares the image of a sum/product with the sum/product of the images.
Laws pass when the truncations agree to within one grid step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Literal

from .arithmetic import ResolutionBudget, add, mul
from .cauchy import CauchySequence, kappa, seq_add, seq_mul
from .dedekind import cut_add, cut_mul, rational_cut, tau
from .errors import UnresolvedPrecision
from .stream import DecimalStream, Verdict, _scaled_range, from_rational, truncation_gap

LAWS = ("add", "mul", "order")


@dataclass
class LawResult:
    passed: bool = True
    max_deviation: int = 0
    failures: int = 0


@dataclass
class HomomorphismReport:
    kind: str
    trials: int
    precision: int
    seed: int
    laws: dict[str, LawResult] = field(default_factory=lambda: {law: LawResult() for law in LAWS})

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.laws.values())

    def record(self, law: str, deviation: int, ok: bool) -> None:
        r = self.laws[law]
        r.max_deviation = max(r.max_deviation, deviation)
        if not ok:
            r.passed = False
            r.failures += 1

    def as_pairs(self) -> list[tuple[str, str]]:
        pairs = [
            ("suite", f"iso-{self.kind}"),
            ("trials", str(self.trials)),
            ("precision", str(self.precision)),
            ("seed", str(self.seed)),
        ]
        for law, r in self.laws.items():
            pairs.append((f"{law}.max_deviation", str(r.max_deviation)))
            pairs.append((f"{law}.pass", str(r.passed).lower()))
        pairs.append(("result", "pass" if self.passed else "fail"))
        return pairs


def _random_rational(rng: random.Random) -> Fraction:
    q = rng.randint(1, 40)
    return Fraction(rng.randint(-8 * q, 8 * q), q)


def _random_non_integer(rng: random.Random) -> Fraction:
    while True:
        g = _random_rational(rng)
        if g.denominator > 1:
            return g


def _sequence_for(limit: Fraction, seed: int, tag: str) -> CauchySequence:
    """Terms wobble around the limit by at most ``0.5 * 10**-n``."""

    def term(n: int) -> Fraction:
        wobble = random.Random(f"{seed}:{tag}:{n}").randint(-5, 5)
        return limit + Fraction(wobble, 10 ** (n + 1))

    return CauchySequence(term, lambda k: k + 1)


def _order_check(report: HomomorphismReport, x: DecimalStream, y: DecimalStream, gx: Fraction, gy: Fraction, k: int) -> None:
    (xa, xb), _ = _scaled_range(x, k)
    (ya, yb), _ = _scaled_range(y, k)
    if ya - xb >= 2:
        seen = Verdict.LESS
    elif xa - yb >= 2:
        seen = Verdict.GREATER
    else:
        seen = Verdict.TIED
    contradicts = (seen is Verdict.LESS and gx >= gy) or (seen is Verdict.GREATER and gx <= gy)
    report.record("order", truncation_gap(x, y, k) if contradicts else 0, not contradicts)


def iso_report(
    kind: Literal["dedekind", "cauchy"], trials: int = 100, k: int = 15, seed: int = 0
) -> HomomorphismReport:
    if kind not in ("dedekind", "cauchy"):
        raise ValueError(f"unknown construction {kind!r}")
    rng = random.Random(seed)
    # derived cuts and sequences go through the generic bisection/enclosure code
    generic = ResolutionBudget(fast_path=False)
    report = HomomorphismReport(kind, trials, k, seed)
    for i in range(trials):
        if kind == "dedekind":
            g1, g2 = _random_rational(rng), _random_rational(rng)
            c1 = rational_cut(g1, floor(g1) - rng.randint(1, 3), floor(g1) + rng.randint(1, 3))
            c2 = rational_cut(g2, floor(g2) - rng.randint(1, 3), floor(g2) + rng.randint(1, 3))
            x, y = tau(c1), tau(c2)
            image_sum, image_prod = tau(cut_add(c1, c2, generic)), tau(cut_mul(c1, c2, generic))
        else:
            g1, g2 = _random_non_integer(rng), _random_non_integer(rng)
            s1, s2 = _sequence_for(g1, seed, f"{i}a"), _sequence_for(g2, seed, f"{i}b")
            x, y = kappa(s1), kappa(s2)
            image_sum, image_prod = kappa(seq_add(s1, s2)), kappa(seq_mul(s1, s2))
        checks = (
            ("add", image_sum, add(x, y), g1 + g2),
            ("mul", image_prod, mul(x, y), g1 * g2),
        )
        for law, lhs, rhs, exact in checks:
            try:
                d = max(truncation_gap(lhs, rhs, k), truncation_gap(lhs, from_rational(exact), k))
            except UnresolvedPrecision:
                report.record(law, 0, False)
                continue
            report.record(law, d, d <= 1)
        try:
            _order_check(report, x, y, g1, g2, k)
        except UnresolvedPrecision:
            report.record("order", 0, False)
    return report
