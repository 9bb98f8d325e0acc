"""Addition, multiplication, reciprocal and division of decimal streams.

Each derived stream commits ``[z]_m`` only when the bounds on its operands
pin it down. Sums and products of truncations increase with precision and
their limit is a supremum, so ``[z]_m`` is the largest m-digit floor any
partial result reaches; it is bracketed by the floor of the current partial
result and the floor just below (or at) the current upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContractViolation, InvalidWitness, UnresolvedPrecision
from .rational import is_finite_decimal
from .stream import (
    DecimalStream,
    IntervalEnclosure,
    LookaheadPolicy,
    RationalStream,
    _scaled_range,
    abs_,
    psi,
    sign,
)

__all__ = [
    "IntervalEnclosure",
    "ResolutionBudget",
    "add",
    "divide",
    "mul",
    "reciprocal",
]


@dataclass(frozen=True)
class ResolutionBudget:
    """Lookahead policy plus the refinement schedule m, m+1, ..., m+L.

    ``fast_path=False`` makes every operand look opaque, which is how the
    generic code path is checked against the exact one.
    """

    policy: LookaheadPolicy = field(default_factory=LookaheadPolicy)
    fast_path: bool = True

    def schedule(self, start: int) -> range:
        return range(start, start + self.policy.max_extra_digits + 1)


DEFAULT_BUDGET = ResolutionBudget()


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _bounds(x: DecimalStream, k: int, exact: bool) -> tuple[Fraction, Fraction, bool]:
    """(lo, hi, strict): lo is at most [x]_k and every truncation of x stays
    below hi (or at it, when not strict).

    An operand that cannot commit its own k-th truncation contributes the
    range of candidates it reported.
    """
    (a, b), _ = _scaled_range(x, k)
    scale = Fraction(1, 10**k)
    if exact and x.value is not None:
        # long-division truncations never exceed the value; the nines-tail
        # representative stays strictly below it
        return a * scale, x.value, x.nines_tail
    return a * scale, (b + 1) * scale, True


def _window(lo: Fraction, hi: Fraction, strict: bool, m: int) -> tuple[int, int]:
    scale = 10**m
    a = _floor(lo * scale)
    b = _ceil(hi * scale) - 1 if strict else _floor(hi * scale)
    if b < a:
        raise ContractViolation(f"inconsistent operand bounds [{lo}, {hi})")
    return a, b


def _psi_times(scaled: int, times: int) -> int:
    return -scaled - 1 if times % 2 else scaled


class _SumStream(DecimalStream):
    def __init__(self, x: DecimalStream, y: DecimalStream, budget: ResolutionBudget) -> None:
        super().__init__(("derived", "add", x, y))
        self.x, self.y, self.budget = x, y, budget

    def _compute(self, m: int) -> int:
        exact = self.budget.fast_path
        for k in self.budget.schedule(m):
            lx, hx, sx = _bounds(self.x, k, exact)
            ly, hy, sy = _bounds(self.y, k, exact)
            lo, hi = lx + ly, hx + hy
            a, b = _window(lo, hi, sx or sy, m)
            if a == b:
                return a
        raise UnresolvedPrecision(IntervalEnclosure(lo, hi), m, k, (a, b), source=self)


class _ProductStream(DecimalStream):
    def __init__(self, x: DecimalStream, y: DecimalStream, budget: ResolutionBudget) -> None:
        super().__init__(("derived", "mul", x, y))
        self.flips = sign(x) + sign(y)
        self.a, self.b = abs_(x), abs_(y)
        self.budget = budget

    def _compute(self, m: int) -> int:
        exact = self.budget.fast_path
        a, b = self.a, self.b
        same_root = a.square_limit is not None and a.square_limit == b.square_limit
        for k in self.budget.schedule(m):
            la, ha, sa = _bounds(a, k, exact)
            lb, hb, sb = _bounds(b, k, exact)
            lo, hi = la * lb, ha * hb
            strict = (sa or sb) and hi > 0
            if same_root and a.square_limit <= hi:
                # both operands are the stream whose truncations square to < n
                hi, strict = Fraction(a.square_limit), True
            lo_m, hi_m = _window(lo, hi, strict, m)
            if lo_m == hi_m:
                return _psi_times(lo_m, self.flips)
        if self.flips % 2:
            enclosure = IntervalEnclosure(-hi, -lo)
            cands = (_psi_times(hi_m, 1), _psi_times(lo_m, 1))
        else:
            enclosure, cands = IntervalEnclosure(lo, hi), (lo_m, hi_m)
        raise UnresolvedPrecision(enclosure, m, k, cands, source=self)


class _ReciprocalStream(DecimalStream):
    def __init__(self, x: DecimalStream, witness: int, budget: ResolutionBudget) -> None:
        super().__init__(("derived", "recip", x, witness))
        self.flips = sign(x)
        self.a = abs_(x)
        self.witness = witness
        self.budget = budget

    def _compute(self, m: int) -> int:
        exact = self.budget.fast_path
        # the enclosure width is about 10**(2*witness - n); start where it can fit a cell
        for n in self.budget.schedule(m + 2 * self.witness + 1):
            la, ha, _ = _bounds(self.a, n, exact)
            # the witness check already pinned [|x|]_n at or above 10**-witness
            la = max(la, Fraction(1, 10**self.witness))
            # 1/[a]_k decreases towards the limit and stays above 1/ha
            lo, hi = 1 / ha, 1 / la
            lo_m, hi_m = _floor(lo * 10**m), _floor(hi * 10**m)
            if lo_m == hi_m:
                return _psi_times(lo_m, self.flips)
        if self.flips:
            enclosure = IntervalEnclosure(-hi, -lo)
            cands = (_psi_times(hi_m, 1), _psi_times(lo_m, 1))
        else:
            enclosure, cands = IntervalEnclosure(lo, hi), (lo_m, hi_m)
        raise UnresolvedPrecision(enclosure, m, n, cands, source=self)


def add(x: DecimalStream, y: DecimalStream, budget: ResolutionBudget = DEFAULT_BUDGET) -> DecimalStream:
    """The limit of ``[x]_k + [y]_k``."""
    if budget.fast_path and x.value is not None and y.value is not None:
        v = x.value + y.value
        reached = not (x.nines_tail or y.nines_tail) and is_finite_decimal(x.value) and is_finite_decimal(y.value)
        return RationalStream(v, nines_tail=not reached, provenance=("derived", "add", x, y))
    return _SumStream(x, y, budget)


def mul(x: DecimalStream, y: DecimalStream, budget: ResolutionBudget = DEFAULT_BUDGET) -> DecimalStream:
    """Sign-folded product: the limit of ``[|x|]_k * [|y|]_k``, complemented
    once when exactly one factor is negative."""
    if budget.fast_path and x.value is not None and y.value is not None:
        a, b = abs_(x), abs_(y)
        w = a.value * b.value

        def reached(s: DecimalStream) -> bool:
            return not s.nines_tail and is_finite_decimal(s.value)

        zero = (a.value == 0 and reached(a)) or (b.value == 0 and reached(b))
        z = RationalStream(w, nines_tail=not (zero or (reached(a) and reached(b))),
                           provenance=("derived", "mul", x, y))
        return psi(z) if (sign(x) + sign(y)) % 2 else z
    return _ProductStream(x, y, budget)


def reciprocal(x: DecimalStream, witness: int, budget: ResolutionBudget = DEFAULT_BUDGET) -> DecimalStream:
    """Greatest lower bound of ``1/[|x|]_k``, complemented when x is negative.

    ``witness`` is an m with ``10**-m <= |x|``; it is checked against the
    m-th truncation of ``|x|`` immediately.
    """
    if witness < 0:
        raise InvalidWitness("witness must be a non-negative precision")
    a = abs_(x)
    if a.query(witness).scaled < 1:
        raise InvalidWitness(f"[|x|]_{witness} = {a.query(witness)} is below 10^-{witness}")
    if budget.fast_path and x.value is not None:
        z = RationalStream(1 / a.value, provenance=("derived", "recip", x, witness))
        return psi(z) if sign(x) else z
    return _ReciprocalStream(x, witness, budget)


def divide(
    x: DecimalStream, y: DecimalStream, witness: int, budget: ResolutionBudget = DEFAULT_BUDGET
) -> DecimalStream:
    return mul(x, reciprocal(y, witness, budget), budget)
