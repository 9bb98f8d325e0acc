"""Decimal streams: real numbers as truncation oracles.

A :class:`DecimalStream` answers ``query(k)`` with the truncation ``[x]_k``.
Every stream caches its deepest truncation and serves shallower requests by
integer division, so the nesting law ``[x]_k = floor([x]_{k+1} / 10)`` holds
by construction.

Some streams also know the exact rational value of their class (``value``)
and whether they are the nines-tail representative of a terminating decimal
(``nines_tail``). Arithmetic uses that knowledge for exact fast paths.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Literal, Sequence

from .errors import Undecidable, UnresolvedPrecision
from .rational import PeriodicDecimal, Truncation, is_finite_decimal, long_division_truncate


@dataclass(frozen=True)
class IntervalEnclosure:
    """Closed rational interval known to contain a value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, q: Fraction | int) -> bool:
        return self.lo <= q <= self.hi


@dataclass(frozen=True)
class LookaheadPolicy:
    """How far derived streams may refine operands before giving up."""

    max_extra_digits: int = 40
    on_unresolved: Literal["error", "interval"] = "error"

    def __post_init__(self) -> None:
        if self.max_extra_digits < 0:
            raise ValueError("max_extra_digits must be non-negative")
        if self.on_unresolved not in ("error", "interval"):
            raise ValueError(f"unknown unresolved policy {self.on_unresolved!r}")


class Verdict(enum.Enum):
    LESS = "<"
    GREATER = ">"
    TIED = "~"


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing two streams at a fixed precision.

    ``TIED`` means the truncations differ by at most one grid step.
    """

    verdict: Verdict
    precision: int

    @property
    def tied(self) -> bool:
        return self.verdict is Verdict.TIED

    def __str__(self) -> str:
        if self.tied:
            return f"tied at precision {self.precision}"
        return f"{self.verdict.value} at precision {self.precision}"


class TailClass(enum.Enum):
    ZEROS = "Q_F"
    NINES = "R9"
    OTHER = "other"


class DecimalStream:
    """An element of the decimal ambient space, given by its truncations."""

    value: Fraction | None = None
    nines_tail: bool = False
    square_limit: int | None = None

    def __init__(self, provenance: tuple) -> None:
        self.provenance = provenance
        self._lock = threading.Lock()
        self._top_k = -1
        self._top = 0

    def query(self, k: int) -> Truncation:
        if k < 0:
            raise ValueError("precision must be non-negative")
        with self._lock:
            if k <= self._top_k:
                return Truncation(k, self._top // 10 ** (self._top_k - k))
            scaled = self._compute(k)
            self._top_k, self._top = k, scaled
            return Truncation(k, scaled)

    def _compute(self, k: int) -> int:
        raise NotImplementedError

    def __repr__(self) -> str:
        tag = self.provenance[0] if self.provenance else "?"
        return f"<{type(self).__name__} {tag}>"


class RationalStream(DecimalStream):
    """A stream with a known rational value.

    With ``nines_tail`` the stream is the representative approached from
    below (``ceil(v * 10**k) - 1``); that only differs from the long-division
    expansion when ``v`` terminates.
    """

    def __init__(self, value: Fraction, nines_tail: bool = False, provenance: tuple | None = None) -> None:
        super().__init__(provenance or ("rational", value))
        self.value = Fraction(value)
        self.nines_tail = bool(nines_tail) and is_finite_decimal(self.value)

    def query(self, k: int) -> Truncation:
        if k < 0:
            raise ValueError("precision must be non-negative")
        if self.nines_tail:
            v = self.value * 10**k
            return Truncation(k, -((-v.numerator) // v.denominator) - 1)
        return long_division_truncate(self.value, k)


class DigitStream(DecimalStream):
    """Integer part plus a digit function; optionally a declared tail block."""

    def __init__(
        self,
        x0: int,
        digits: Callable[[int], int],
        tail: Sequence[int] | None = None,
        provenance: tuple | None = None,
    ) -> None:
        super().__init__(provenance or ("digits",))
        self._digits = digits
        self.tail = tuple(tail) if tail is not None else None
        self._top_k, self._top = 0, int(x0)

    def _compute(self, k: int) -> int:
        scaled = self._top
        for i in range(self._top_k + 1, k + 1):
            d = self._digits(i)
            if not (isinstance(d, int) and 0 <= d <= 9):
                raise ValueError(f"digit {i} is {d!r}, expected 0..9")
            scaled = scaled * 10 + d
        return scaled


class SqrtStream(DecimalStream):
    """The largest truncations whose squares stay strictly below n."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError("sqrt_stream needs a positive integer")
        super().__init__(("sqrt", n))
        self.square_limit = n
        r = isqrt(n)
        if r * r == n:
            # squares of truncations never reach n, so this is r - 0.999...
            self.value = Fraction(r)
            self.nines_tail = True
        self._n = n
        self._top_k, self._top = 0, isqrt(n - 1)

    def _compute(self, k: int) -> int:
        t = self._top
        for i in range(self._top_k + 1, k + 1):
            bound = self._n * 100**i
            d = 9
            while (10 * t + d) ** 2 >= bound:
                d -= 1
            t = 10 * t + d
        return t


class _PsiStream(DecimalStream):
    def __init__(self, operand: DecimalStream) -> None:
        super().__init__(("derived", "psi", operand))
        self.operand = operand
        if operand.value is not None:
            self.value = -operand.value
            self.nines_tail = is_finite_decimal(self.value) and not operand.nines_tail

    def _compute(self, k: int) -> int:
        (a, b), err = _scaled_range(self.operand, k)
        if err is not None:
            enc = err.enclosure
            raise UnresolvedPrecision(
                IntervalEnclosure(-enc.hi, -enc.lo), k, err.reached, (-b - 1, -a - 1), source=self
            )
        return -a - 1


class _MaxStream(DecimalStream):
    def __init__(self, xs: Sequence[DecimalStream]) -> None:
        super().__init__(("derived", "sup", tuple(xs)))
        self.operands = tuple(xs)

    def _compute(self, k: int) -> int:
        ranges = [_scaled_range(x, k) for x in self.operands]
        a = max(r[0][0] for r in ranges)
        b = max(r[0][1] for r in ranges)
        if a == b:
            return a
        reached = max(r[1].reached for r in ranges if r[1] is not None)
        scale = Fraction(1, 10**k)
        raise UnresolvedPrecision(IntervalEnclosure(a * scale, (b + 1) * scale), k, reached, (a, b), source=self)


def from_rational(r: Fraction | int) -> RationalStream:
    return RationalStream(Fraction(r))


def from_digit_function(
    x0: int, digits: Callable[[int], int], tail: Sequence[int] | None = None
) -> DigitStream:
    """Stream ``x0 . d(1) d(2) ...``.

    ``tail`` declares the block the digits eventually repeat; it is only used
    by :func:`classify_tail` and never checked against ``digits``.
    """
    return DigitStream(x0, digits, tail)


def from_periodic_digits(p: PeriodicDecimal) -> DigitStream:
    """Digit stream for an eventually periodic expansion, all-nines included.

    The result is deliberately opaque to the rational fast paths.
    """
    return DigitStream(p.integer_part, p.digit, p.period, provenance=("digits", str(p)))


def sqrt_stream(n: int) -> SqrtStream:
    return SqrtStream(n)


def truncate(x: DecimalStream, k: int) -> Truncation:
    return x.query(k)


def psi(x: DecimalStream) -> DecimalStream:
    """Nines complement, the representation-level additive inverse."""
    if isinstance(x, _PsiStream):
        return x.operand
    if isinstance(x, RationalStream):
        v = -x.value
        return RationalStream(v, not x.nines_tail, provenance=("derived", "psi", x))
    return _PsiStream(x)


def sign(x: DecimalStream) -> int:
    """0 when the integer part is non-negative, 1 otherwise."""
    return 0 if x.query(0).scaled >= 0 else 1


def abs_(x: DecimalStream) -> DecimalStream:
    return psi(x) if sign(x) else x


def _scaled_range(x: DecimalStream, k: int) -> tuple[tuple[int, int], UnresolvedPrecision | None]:
    try:
        s = x.query(k).scaled
        return (s, s), None
    except UnresolvedPrecision as e:
        if e.source is x and e.precision == k:
            return e.candidates, e
        raise


def compare_upto(x: DecimalStream, y: DecimalStream, k: int) -> Comparison:
    """Compare ``[x]_k`` with ``[y]_k``.

    A gap of two or more grid steps is a strict verdict that also holds
    between the real numbers; anything closer is ``TIED``. When a derived
    stream cannot commit its k-th truncation, the verdict is still given if
    it holds for every truncation its enclosure allows.
    """
    (xa, xb), xerr = _scaled_range(x, k)
    (ya, yb), yerr = _scaled_range(y, k)
    if ya - xb >= 2:
        return Comparison(Verdict.LESS, k)
    if xa - yb >= 2:
        return Comparison(Verdict.GREATER, k)
    if max(xb - ya, yb - xa) <= 1:
        return Comparison(Verdict.TIED, k)
    # exact truncations always produce one of the verdicts above
    raise xerr or yerr


def truncation_gap(x: DecimalStream, y: DecimalStream, k: int) -> int:
    """Largest distance in grid steps between admissible k-th truncations of x and y."""
    (xa, xb), _ = _scaled_range(x, k)
    (ya, yb), _ = _scaled_range(y, k)
    return max(abs(xb - ya), abs(yb - xa))


def decide_equiv_rational(x: DecimalStream, y: DecimalStream) -> bool:
    """Exact equivalence for streams whose rational value is known."""
    if x.value is None or y.value is None:
        raise Undecidable("equivalence of opaque streams is undecidable; use compare_upto")
    return x.value == y.value


def classify_tail(x: DecimalStream) -> TailClass:
    if x.value is not None:
        if x.nines_tail:
            return TailClass.NINES
        return TailClass.ZEROS if is_finite_decimal(x.value) else TailClass.OTHER
    tail = getattr(x, "tail", None)
    if tail is None:
        raise Undecidable("stream carries no tail information")
    if all(d == 9 for d in tail):
        return TailClass.NINES
    if all(d == 0 for d in tail):
        return TailClass.ZEROS
    return TailClass.OTHER


def resolve(x: DecimalStream, k: int, policy: LookaheadPolicy) -> Truncation | IntervalEnclosure:
    """``x.query(k)``, or the enclosure when the policy asks for intervals."""
    try:
        return x.query(k)
    except UnresolvedPrecision as e:
        if policy.on_unresolved == "interval":
            return e.enclosure
        raise
