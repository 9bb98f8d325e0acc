"""Dedekind cuts as rational membership oracles, and their map into streams.

A cut answers ``member(q)`` with :attr:`Side.A` (q lies below the
boundary) or :attr:`Side.B`. Cuts built from other cuts may also answer
:attr:`Side.UNRESOLVED` when their bisection budget runs out before q is
separated from the boundary; that answer is passed on, never guessed.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arithmetic import DEFAULT_BUDGET, ResolutionBudget
from .errors import ContractViolation, UnresolvedPrecision
from .rational import is_finite_decimal
from .stream import (
    Comparison,
    DecimalStream,
    IntervalEnclosure,
    Verdict,
    compare_upto,
    from_rational,
)


class Side(enum.Enum):
    A = "A"
    B = "B"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class DedekindCut:
    """``member`` splits the rationals; the witnesses lie on either side.

    ``boundary`` is the rational boundary when it is known exactly, with the
    convention that it belongs to the upper side.
    """

    member: Callable[[Fraction], Side]
    witness_a: Fraction
    witness_b: Fraction
    boundary: Fraction | None = None


def rational_cut(
    g: Fraction | int, witness_a: Fraction | int | None = None, witness_b: Fraction | int | None = None
) -> DedekindCut:
    """The cut ``{q < g} | {q >= g}``; witnesses default to ``g - 1`` and ``g``."""
    g = Fraction(g)
    wa = g - 1 if witness_a is None else Fraction(witness_a)
    wb = g if witness_b is None else Fraction(witness_b)
    return DedekindCut(lambda q: Side.A if q < g else Side.B, wa, wb, boundary=g)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


class _Bracket:
    """Shared, monotonically tightening interval (a, b] around a cut boundary."""

    def __init__(self, cut: DedekindCut) -> None:
        self.cut = cut
        self.a, self.b = Fraction(cut.witness_a), Fraction(cut.witness_b)
        self.lock = threading.Lock()

    def ask(self, q: Fraction) -> Side:
        side = self.cut.member(q)
        if not isinstance(side, Side):
            raise ContractViolation(f"membership oracle returned {side!r}")
        with self.lock:
            if side is Side.A and q > self.a:
                self.a = q
            elif side is Side.B and q < self.b:
                self.b = q
        return side

    def snapshot(self) -> tuple[Fraction, Fraction]:
        with self.lock:
            return self.a, self.b

    def halve(self) -> bool:
        """Bisect once; False when the midpoint could not be placed."""
        a, b = self.snapshot()
        return self.ask((a + b) / 2) is not Side.UNRESOLVED


def _check_witnesses(cut: DedekindCut) -> None:
    if cut.member(Fraction(cut.witness_a)) is not Side.A:
        raise ContractViolation(f"witness {cut.witness_a} is not on the lower side")
    if cut.member(Fraction(cut.witness_b)) is not Side.B:
        raise ContractViolation(f"witness {cut.witness_b} is not on the upper side")


class _TauStream(DecimalStream):
    def __init__(self, cut: DedekindCut) -> None:
        super().__init__(("cut", cut))
        _check_witnesses(cut)
        self.bracket = _Bracket(cut)
        if cut.boundary is not None:
            # the supremum of {q < g} is the nines-tail representative of g
            self.value = Fraction(cut.boundary)
            self.nines_tail = is_finite_decimal(self.value)

    def _compute(self, m: int) -> int:
        scale = 10**m
        a, b = self.bracket.snapshot()
        # every element of A floors into lo..hi at grid m
        lo, hi = _floor(a * scale), _ceil(b * scale) - 1
        stuck: set[int] = set()
        while lo < hi:
            p = _probe(lo, hi, stuck)
            if p is None:
                raise UnresolvedPrecision(
                    IntervalEnclosure(Fraction(lo, scale), Fraction(hi + 1, scale)), m, m, (lo, hi), source=self
                )
            side = self.bracket.ask(Fraction(p, scale))
            if side is Side.A:
                lo = p
            elif side is Side.B:
                hi = p - 1
            else:
                stuck.add(p)
            stuck = {s for s in stuck if lo < s <= hi}
        return lo


def _probe(lo: int, hi: int, stuck: set[int]) -> int | None:
    """Grid point in (lo, hi] nearest the middle that has not come back unresolved."""
    mid = (lo + hi + 1) // 2
    for d in range(hi - lo + 1):
        for p in (mid - d, mid + d):
            if lo < p <= hi and p not in stuck:
                return p
    return None


def tau(cut: DedekindCut, budget: ResolutionBudget = DEFAULT_BUDGET) -> DecimalStream:
    """The decimal stream of ``sup A``.

    ``query(m)`` bisects on grid points; a rational boundary that is a grid
    point lands on the upper side, so the stream ends in nines there.
    """
    return _TauStream(cut)


def cut_of_stream(x: DecimalStream, budget: ResolutionBudget = DEFAULT_BUDGET) -> DedekindCut:
    """``A = {q : q strictly below x}``; exact when x knows its value."""
    if x.value is not None and budget.fast_path:
        v = x.value
        return DedekindCut(lambda q: Side.A if q < v else Side.B, v - 1, v, boundary=v)
    depth = budget.policy.max_extra_digits

    def member(q: Fraction) -> Side:
        r = from_rational(q)
        for k in range(depth + 1):
            try:
                c = compare_upto(r, x, k)
            except UnresolvedPrecision:
                continue
            if c.verdict is Verdict.LESS:
                return Side.A
            if c.verdict is Verdict.GREATER:
                return Side.B
        return Side.UNRESOLVED

    x0 = x.query(0).scaled
    # two grid steps at precision 0 separate these from x
    return DedekindCut(member, Fraction(x0 - 2), Fraction(x0 + 2))


def _steps(budget: ResolutionBudget) -> int:
    return 4 * budget.policy.max_extra_digits + 64


def cut_add(c1: DedekindCut, c2: DedekindCut, budget: ResolutionBudget = DEFAULT_BUDGET) -> DedekindCut:
    """Upper side ``B + D``; the lower side is its complement."""
    if budget.fast_path and c1.boundary is not None and c2.boundary is not None:
        return rational_cut(c1.boundary + c2.boundary)
    left, right = _Bracket(c1), _Bracket(c2)
    steps = _steps(budget)

    def member(q: Fraction) -> Side:
        for _ in range(steps + 1):
            a1, b1 = left.snapshot()
            a2, b2 = right.snapshot()
            if q >= b1 + b2:
                return Side.B
            if q <= a1 + a2:
                return Side.A
            wider = left if b1 - a1 >= b2 - a2 else right
            if not wider.halve():
                return Side.UNRESOLVED
        return Side.UNRESOLVED

    return DedekindCut(member, c1.witness_a + c2.witness_a, c1.witness_b + c2.witness_b)


def cut_neg(c: DedekindCut) -> DedekindCut:
    """``(A|B) -> (-B | -A)``, up to where the boundary itself goes."""

    def member(q: Fraction) -> Side:
        side = c.member(-q)
        if side is Side.A:
            return Side.B
        if side is Side.B:
            return Side.A
        return side

    # a known boundary would now sit on the lower side, so it is not passed on
    return DedekindCut(member, -c.witness_b, -c.witness_a)


def cut_sign(c: DedekindCut, budget: ResolutionBudget = DEFAULT_BUDGET) -> int:
    """1 when the boundary is negative, 0 when it is non-negative.

    A boundary too close to zero to separate within the budget counts as
    non-negative; both signs give the same product then.
    """
    if c.member(Fraction(0)) is Side.A:
        return 0
    if c.witness_b < 0:
        return 1
    br = _Bracket(c)
    for _ in range(_steps(budget)):
        a, b = br.snapshot()
        if b < 0:
            return 1
        if not br.halve():
            break
    return 0


def _nonneg_product(c1: DedekindCut, c2: DedekindCut, budget: ResolutionBudget) -> DedekindCut:
    left, right = _Bracket(c1), _Bracket(c2)
    steps = _steps(budget)

    def member(q: Fraction) -> Side:
        for _ in range(steps + 1):
            a1, b1 = left.snapshot()
            a2, b2 = right.snapshot()
            lo1, lo2 = max(a1, Fraction(0)), max(a2, Fraction(0))
            if q >= b1 * b2:
                return Side.B
            if q < lo1 * lo2 or (a1 > 0 and a2 > 0 and q <= a1 * a2):
                return Side.A
            # halve the factor whose uncertainty moves the product most
            wider = left if (b1 - lo1) * b2 >= (b2 - lo2) * b1 else right
            if not wider.halve():
                return Side.UNRESOLVED
        return Side.UNRESOLVED

    a1, b1 = left.snapshot()
    a2, b2 = right.snapshot()
    return DedekindCut(member, max(a1, Fraction(0)) * max(a2, Fraction(0)) - 1, b1 * b2)


def cut_mul(c1: DedekindCut, c2: DedekindCut, budget: ResolutionBudget = DEFAULT_BUDGET) -> DedekindCut:
    """Product through absolute values: the non-negative case multiplies the
    upper sides, and the sign is restored by negating the cut."""
    if budget.fast_path and c1.boundary is not None and c2.boundary is not None:
        return rational_cut(c1.boundary * c2.boundary)
    s1, s2 = cut_sign(c1, budget), cut_sign(c2, budget)
    m1 = cut_neg(c1) if s1 else c1
    m2 = cut_neg(c2) if s2 else c2
    prod = _nonneg_product(m1, m2, budget)
    return cut_neg(prod) if (s1 + s2) % 2 else prod


def cut_leq(c1: DedekindCut, c2: DedekindCut, k: int, budget: ResolutionBudget = DEFAULT_BUDGET) -> Comparison:
    return compare_upto(tau(c1, budget), tau(c2, budget), k)
