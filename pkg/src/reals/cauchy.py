"""Cauchy sequences with a convergence modulus, and their map into streams."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arithmetic import DEFAULT_BUDGET, ResolutionBudget
from .errors import UnresolvedPrecision
from .stream import Comparison, DecimalStream, IntervalEnclosure, compare_upto


@dataclass(frozen=True)
class CauchySequence:
    """Rational terms plus ``modulus(k)``: an index past which any two terms
    differ by less than ``10**-k``."""

    term: Callable[[int], Fraction]
    modulus: Callable[[int], int]


def constant_sequence(q: Fraction | int) -> CauchySequence:
    q = Fraction(q)
    return CauchySequence(lambda n: q, lambda k: 0)


def kappa_enclosure(seq: CauchySequence, j: int) -> IntervalEnclosure:
    """``[t - 10**-j, t + 10**-j]`` with ``t = term(modulus(j))``; holds the limit."""
    t = Fraction(seq.term(seq.modulus(j)))
    eps = Fraction(1, 10**j)
    return IntervalEnclosure(t - eps, t + eps)


class _KappaStream(DecimalStream):
    def __init__(self, seq: CauchySequence, budget: ResolutionBudget) -> None:
        super().__init__(("sequence", seq))
        self.seq, self.budget = seq, budget

    def _compute(self, m: int) -> int:
        scale = 10**m
        # one guard digit past the cell size keeps straddles rare
        for j in self.budget.schedule(m + 2):
            enc = kappa_enclosure(self.seq, j)
            lo, hi = enc.lo * scale, enc.hi * scale
            a, b = lo.numerator // lo.denominator, hi.numerator // hi.denominator
            if a == b:
                return a
        raise UnresolvedPrecision(enc, m, j, (a, b), source=self)


def kappa(seq: CauchySequence, budget: ResolutionBudget = DEFAULT_BUDGET) -> DecimalStream:
    """The decimal stream of the limit. A limit sitting on a grid point
    cannot be resolved there and raises :class:`UnresolvedPrecision`."""
    return _KappaStream(seq, budget)


def seq_add(s1: CauchySequence, s2: CauchySequence) -> CauchySequence:
    return CauchySequence(
        lambda n: s1.term(n) + s2.term(n),
        lambda k: max(s1.modulus(k + 1), s2.modulus(k + 1)),
    )


def _digits_above(z: Fraction) -> int:
    """Smallest c with 10**c >= z."""
    c = 0
    while 10**c < z:
        c += 1
    return c


def seq_mul(s1: CauchySequence, s2: CauchySequence) -> CauchySequence:
    n1, n2 = s1.modulus(0), s2.modulus(0)
    # every term from the modulus-0 index on stays within 1 of that term
    z = max(abs(Fraction(s1.term(n1))), abs(Fraction(s2.term(n2)))) + 1
    c = _digits_above(2 * z)
    return CauchySequence(
        lambda n: s1.term(n) * s2.term(n),
        lambda k: max(s1.modulus(k + c + 1), s2.modulus(k + c + 1), n1, n2),
    )


@dataclass(frozen=True)
class Equivalence:
    """Outcome of :func:`seq_equiv`.

    ``equivalent`` means no gap was seen up to precision ``k``. Otherwise
    the terms at ``index`` are at least ``2 * 10**-k`` apart while both lie
    within ``10**-(k+1)`` of their limits, so the limits differ.
    """

    equivalent: bool
    k: int
    index: int | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def seq_equiv(s1: CauchySequence, s2: CauchySequence, k_max: int) -> Equivalence:
    for k in range(k_max + 1):
        n = max(s1.modulus(k + 1), s2.modulus(k + 1))
        if abs(s1.term(n) - s2.term(n)) >= Fraction(2, 10**k):
            return Equivalence(False, k, n)
    return Equivalence(True, k_max)


def seq_leq(s1: CauchySequence, s2: CauchySequence, k: int, budget: ResolutionBudget = DEFAULT_BUDGET) -> Comparison:
    return compare_upto(kappa(s1, budget), kappa(s2, budget), k)
