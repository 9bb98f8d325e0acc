"""Exception types shared across the package."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .stream import IntervalEnclosure


class RealsError(Exception):
    """Base class for errors raised by this package."""


class UnresolvedPrecision(RealsError):
    """A digit could not be committed within the lookahead budget.

    ``enclosure`` bounds the value of the derived stream, ``precision`` is the
    requested truncation precision and ``reached`` the deepest operand
    precision that was tried. ``candidates`` is the inclusive range of scaled
    truncations at ``precision`` still consistent with the enclosure, and
    ``source`` is the stream that gave up.
    """

    def __init__(
        self,
        enclosure: IntervalEnclosure,
        precision: int,
        reached: int,
        candidates: tuple[int, int],
        source: object = None,
    ) -> None:
        self.enclosure = enclosure
        self.precision = precision
        self.reached = reached
        self.candidates = candidates
        self.source = source
        super().__init__(
            f"cannot commit digit {precision}: scaled truncation is one of "
            f"{candidates[0]}..{candidates[1]} after refining operands to precision {reached}"
        )


class InvalidWitness(RealsError):
    """A positivity witness m did not certify 10**-m <= |x|."""


class ContractViolation(RealsError):
    """A caller-supplied oracle broke its stated contract."""


class Undecidable(RealsError, ValueError):
    """The question cannot be answered from the information a stream exposes."""
