"""Integer-only arithmetic kernel: restoring long division and half-threshold rounding.

Every division on the drawing path goes through ``long_divide`` /
``div_round_half``, which accept non-negative operands only.  ``Rational``
(the stdlib ``fractions.Fraction``) together with ``rat_round_half`` forms the
exact signed oracle the test suite checks the integer path against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

# Exact rational for the oracle side: always lowest terms, denominator > 0.
Rational = Fraction

#: Radius cap keeping the largest intermediate product (roughly the square of
#: 5/4 of the radius) inside signed 64-bit range.
MAX_RADIUS = 1 << 28


class DivResult(NamedTuple):
    """Quotient/remainder pair with ``0 <= remainder < divisor``."""

    quotient: int
    remainder: int


def long_divide(numerator: int, divisor: int) -> DivResult:
    """Divide non-negative integers by restoring shift-subtract division.

    Walks the numerator bits from the top, shifting each into a running
    remainder and subtracting the divisor whenever it fits.  Returns
    ``DivResult(q, r)`` with ``numerator == q * divisor + r``.
    """
    if divisor == 0:
        raise ZeroDivisionError("long_divide: divisor is zero")
    if divisor < 0 or numerator < 0:
        raise ValueError(
            f"long_divide: operands must be non-negative, got ({numerator}, {divisor})"
        )
    quotient = 0
    remainder = 0
    for bit in range(numerator.bit_length() - 1, -1, -1):
        remainder = (remainder << 1) | ((numerator >> bit) & 1)
        quotient <<= 1
        if remainder >= divisor:
            remainder -= divisor
            quotient |= 1
    return DivResult(quotient, remainder)


def div_round_half(numerator: int, divisor: int) -> int:
    """Divide non-negative integers, rounding to nearest with ties up.

    The threshold test is the remainder shifted left one bit against the
    divisor: below means floor, at or above means ceiling.
    """
    quotient, remainder = long_divide(numerator, divisor)
    if (remainder << 1) >= divisor:
        return quotient + 1
    return quotient


def rat_round_half(value: Rational) -> int:
    """Nearest integer to an exact rational; halves round toward +infinity.

    Agrees with ``div_round_half`` on every non-negative ``numerator/divisor``
    and extends the same tie rule to signed values.
    """
    num, den = value.numerator, value.denominator
    return (2 * num + den) // (2 * den)
