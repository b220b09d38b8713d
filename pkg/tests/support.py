"""Shared helpers for the test suite: fixed streams, random inputs, bounds."""

from __future__ import annotations

import random
from fractions import Fraction

from streamreal.kernel import SdStream


def sd(digits, pad=0):
    """Stream starting with ``digits`` and continuing with ``pad`` forever."""
    stream = SdStream.constant(pad)
    for d in reversed(digits):
        stream = SdStream.cons(d, stream)
    return stream


def within(value: Fraction, target: Fraction, n: int) -> bool:
    """|value - target| <= 2**-n."""
    return abs(value - target) <= Fraction(1, 1 << n)


def unit_fraction(rng: random.Random, max_den: int = 1000) -> Fraction:
    """Random rational in [-1, 1]."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-den, den), den)


def division_pair(rng: random.Random, max_den: int = 1000) -> tuple[Fraction, Fraction]:
    """Random (x, y) with 1/4 <= y <= 1 and |x| <= y, exactly."""
    den = rng.randint(4, max_den)
    y = Fraction(rng.randint((den + 3) // 4, den), den)
    scale = rng.randint(1, max_den)
    x = y * Fraction(rng.randint(-scale, scale), scale)
    return x, y
