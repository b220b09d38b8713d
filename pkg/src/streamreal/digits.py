"""Digit alphabets and exact rational plumbing shared by every other module.

A signed digit is one of the integers -1, 0, +1; a proper digit excludes 0.
Rationals are stdlib :class:`fractions.Fraction` values, which already keep
the canonical form we rely on (positive denominator, reduced by gcd,
arbitrary-precision integers).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

SignedDigit = Literal[-1, 0, 1]
ProperDigit = Literal[-1, 1]

SIGNED_DIGITS: tuple[SignedDigit, ...] = (-1, 0, 1)
PROPER_DIGITS: tuple[ProperDigit, ...] = (-1, 1)

# Accept the unicode minus sign on input; we always print the ASCII one.
_MINUS_SIGNS = "−-"


def negate_digit(d: SignedDigit) -> SignedDigit:
    """Return -d (an involution on the digit alphabet)."""
    return -d


def as_signed_digit(value: int) -> SignedDigit:
    if value not in (-1, 0, 1):
        raise ValueError(f"not a signed digit: {value!r}")
    return value  # type: ignore[return-value]


def as_proper_digit(value: int) -> ProperDigit:
    if value not in (-1, 1):
        raise ValueError(f"not a proper digit: {value!r}")
    return value  # type: ignore[return-value]


def make_fraction(numerator: int, denominator: int) -> Fraction:
    """Canonical reduced fraction with positive denominator.

    Raises ``ValueError("zero-denominator")`` when ``denominator`` is 0.
    """
    if denominator == 0:
        raise ValueError("zero-denominator")
    return Fraction(numerator, denominator)


def compare(a: Fraction, b: Fraction) -> int:
    """Exact order: -1 if a < b, 0 if a == b, +1 if a > b."""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def parse_rational(text: str) -> Fraction:
    """Parse ``P/Q`` or a bare integer ``P`` into a fraction.

    The denominator must be a positive decimal literal; the optional sign
    (ASCII ``-`` or unicode minus) belongs to the numerator.
    """
    s = text.strip()
    for sign in _MINUS_SIGNS:
        s = s.replace(sign, "-")
    num_text, slash, den_text = s.partition("/")
    try:
        numerator = int(num_text)
    except ValueError:
        raise ValueError(f"cannot parse rational: {text!r}") from None
    if not slash:
        return Fraction(numerator)
    if not den_text.isdigit():
        raise ValueError(f"cannot parse rational: {text!r}")
    return make_fraction(numerator, int(den_text))


def format_rational(a: Fraction) -> str:
    """Render as ``P/Q`` (denominator always shown, ASCII minus)."""
    return f"{a.numerator}/{a.denominator}"
