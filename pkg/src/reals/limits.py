"""Suprema, infima and limits in the lexicographic order.

Only what is effective is offered: exact sup/inf of finite families,
limits of monotone sequences detected by stabilization, and explicitly
finite-horizon enclosures for upper and lower limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Sequence

from .errors import ContractViolation, UnresolvedPrecision
from .stream import DecimalStream, IntervalEnclosure, _MaxStream, psi


@dataclass(frozen=True)
class StreamSequence:
    term: Callable[[int], DecimalStream]
    monotone: Literal["increasing", "decreasing"] | None = None
    bound: DecimalStream | None = None
    modulus: Callable[[int], int] | None = None


def sup_finite(xs: Sequence[DecimalStream]) -> DecimalStream:
    """Least upper bound of a finite family: truncation-wise maximum."""
    xs = list(xs)
    if not xs:
        raise ValueError("sup of an empty family")
    if len(xs) == 1:
        return xs[0]
    if all(x.value is not None for x in xs):
        # the order is total, so the sup is one of the members
        return max(xs, key=lambda x: (x.value, not x.nines_tail))
    return _MaxStream(xs)


def inf_finite(xs: Sequence[DecimalStream]) -> DecimalStream:
    xs = list(xs)
    if not xs:
        raise ValueError("inf of an empty family")
    return psi(sup_finite([psi(x) for x in xs]))


class _MonotoneLimit(DecimalStream):
    def __init__(self, seq: StreamSequence, window: int, horizon: Callable[[int], int]) -> None:
        super().__init__(("derived", "limit", seq))
        self.seq, self.window, self.horizon = seq, window, horizon

    def _compute(self, m: int) -> int:
        seq = self.seq
        start = seq.modulus(m) if seq.modulus else 0
        stop = start + self.horizon(m)
        prev, run = None, 0
        lo = hi = None
        for n in range(start, stop):
            t = seq.term(n).query(m).scaled
            if prev is not None:
                if seq.monotone == "increasing" and t < prev or seq.monotone == "decreasing" and t > prev:
                    raise ContractViolation(f"term {n} breaks the declared {seq.monotone} order")
            run = run + 1 if t == prev else 1
            prev = t
            lo = t if lo is None else min(lo, t)
            hi = t if hi is None else max(hi, t)
            if run >= self.window:
                return t
        scale = Fraction(1, 10**m)
        if seq.monotone == "increasing" and seq.bound is not None:
            hi = max(hi, seq.bound.query(m).scaled + 1)
        elif seq.monotone == "decreasing" and seq.bound is not None:
            lo = min(lo, seq.bound.query(m).scaled)
        raise UnresolvedPrecision(
            IntervalEnclosure(lo * scale, (hi + 1) * scale), m, stop - 1, (lo, hi), source=self
        )


def monotone_limit(
    seq: StreamSequence,
    window: int = 3,
    horizon: Callable[[int], int] | None = None,
) -> DecimalStream:
    """Limit of a bounded monotone sequence.

    ``query(m)`` scans terms until their m-th truncation repeats for
    ``window`` consecutive indices (default horizon ``10*(m+1)`` indices).
    Stabilization is a heuristic unless a modulus backs the sequence.
    """
    if seq.monotone is None or seq.bound is None:
        raise ValueError("monotone_limit needs a monotone flag and a bound")
    return _MonotoneLimit(seq, window, horizon or (lambda m: 10 * (m + 1)))


def approx_limsup(seq: StreamSequence, start: int, horizon: int, k: int) -> IntervalEnclosure:
    """Finite-horizon stand-in for the upper limit, not the upper limit itself.

    The maximum of the k-th truncations of terms start..start+horizon-1,
    widened by one grid step.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    top = sup_finite([seq.term(n) for n in range(start, start + horizon)]).query(k).value
    return IntervalEnclosure(top, top + Fraction(1, 10**k))


def approx_liminf(seq: StreamSequence, start: int, horizon: int, k: int) -> IntervalEnclosure:
    """Dual of :func:`approx_limsup` through the nines complement."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    bottom = inf_finite([seq.term(n) for n in range(start, start + horizon)]).query(k).value
    return IntervalEnclosure(bottom, bottom + Fraction(1, 10**k))
