"""Exact rationals, decimal truncations and eventually periodic expansions.

Everything here is finite and decidable. Truncations use floor semantics:
the integer part may be negative while the fractional digits stay in 0..9,
so -40/3 reads ``(-14).666...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


def make_rational(p: int, q: int) -> Fraction:
    """Return p/q in lowest terms with a positive denominator."""
    if q == 0:
        raise ValueError("zero denominator")
    return Fraction(p, q)


def is_finite_decimal(r: Fraction) -> bool:
    """True when r has a terminating decimal expansion."""
    d = r.denominator
    for f in (2, 5):
        while d % f == 0:
            d //= f
    return d == 1


@dataclass(frozen=True)
class Truncation:
    """The finite decimal ``scaled / 10**precision``."""

    precision: int
    scaled: int

    def __post_init__(self) -> None:
        if self.precision < 0:
            raise ValueError("precision must be non-negative")

    @property
    def value(self) -> Fraction:
        return Fraction(self.scaled, 10**self.precision)

    @property
    def integer_part(self) -> int:
        return self.scaled // 10**self.precision

    @property
    def digits(self) -> list[int]:
        """Fractional digits x_1..x_k (always in 0..9)."""
        frac = self.scaled % 10**self.precision
        return [int(c) for c in str(frac).zfill(self.precision)] if self.precision else []

    def floor_digits(self) -> str:
        """Render in the floor notation, e.g. ``(-14).66``."""
        ip = self.integer_part
        head = f"({ip})" if ip < 0 else str(ip)
        if not self.precision:
            return head
        return head + "." + "".join(map(str, self.digits))

    def sign_magnitude(self) -> str:
        """Render the same rational the way a calculator would, e.g. ``-13.34``."""
        n = abs(self.scaled)
        sign = "-" if self.scaled < 0 else ""
        if not self.precision:
            return f"{sign}{n}"
        ip, frac = divmod(n, 10**self.precision)
        return f"{sign}{ip}.{str(frac).zfill(self.precision)}"

    def __str__(self) -> str:
        return self.floor_digits()


def long_division_truncate(r: Fraction, k: int) -> Truncation:
    """[r]_k computed digit by digit with the schoolbook long division."""
    if k < 0:
        raise ValueError("precision must be non-negative")
    p, q = r.numerator, r.denominator
    scaled = p // q
    rem = p - scaled * q
    for _ in range(k):
        rem *= 10
        d = rem // q
        rem -= d * q
        scaled = scaled * 10 + d
    return Truncation(k, scaled)


def trunc_add(a: Truncation, b: Truncation) -> Truncation:
    if a.precision != b.precision:
        raise ValueError(f"precision mismatch: {a.precision} != {b.precision}")
    return Truncation(a.precision, a.scaled + b.scaled)


def trunc_psi(a: Truncation) -> Truncation:
    """Nines complement: integer part -1-x0, every digit 9-x_i."""
    return Truncation(a.precision, -a.scaled - 1)


@dataclass(frozen=True)
class PeriodicDecimal:
    """``integer_part . preperiod (period)`` in floor notation.

    :func:`detect_period` always returns the minimal pre-period and period;
    hand-built values (parser literals such as ``0.1(66)``) need not be
    minimal, :meth:`normalized` fixes that.
    """

    integer_part: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be non-empty")
        if any(not 0 <= d <= 9 for d in self.preperiod + self.period):
            raise ValueError("digits must lie in 0..9")

    def digit(self, i: int) -> int:
        """The i-th fractional digit (i >= 1)."""
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        return self.period[(i - len(self.preperiod) - 1) % len(self.period)]

    def normalized(self) -> PeriodicDecimal:
        return detect_period(from_periodic(self))

    def __str__(self) -> str:
        ip = f"({self.integer_part})" if self.integer_part < 0 else str(self.integer_part)
        pre = "".join(map(str, self.preperiod))
        per = "".join(map(str, self.period))
        return f"{ip}.{pre}({per})"


def detect_period(r: Fraction) -> PeriodicDecimal:
    """Minimal pre-period and period of r, read off the first repeated remainder."""
    p, q = r.numerator, r.denominator
    ip = p // q
    rem = p - ip * q
    seen: dict[int, int] = {}
    digits: list[int] = []
    while rem not in seen:
        seen[rem] = len(digits)
        rem *= 10
        d = rem // q
        rem -= d * q
        digits.append(d)
    start = seen[rem]
    return PeriodicDecimal(ip, tuple(digits[:start]), tuple(digits[start:]))


def from_periodic(p: PeriodicDecimal) -> Fraction:
    """The rational whose expansion ``p`` describes.

    An all-nines period is rejected: such an expansion is never the
    long-division expansion of a rational.
    """
    if all(d == 9 for d in p.period):
        raise ValueError(f"all-nines period in {p}: not a rational expansion")
    k, s = len(p.preperiod), len(p.period)
    head = p.integer_part
    for d in p.preperiod:
        head = head * 10 + d
    block = 0
    for d in p.period:
        block = block * 10 + d
    return Fraction(head * (10**s - 1) + block, 10**k * (10**s - 1))
