"""Signed-digit stream arithmetic on reals in [-1, 1].

Every operation is a pure, productive stream transformer.  Semantic
preconditions (for example ``x <= 0`` for :func:`add_one`) are not runtime
checked -- they are undecidable on streams -- so the denotational guarantees
hold only when the caller satisfies them; the defining digit equations are
total regardless.  The CLI validates preconditions on exact rationals before
any stream is built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .kernel import SdStream, Splice, stream_from_digits, unfold_sd


def encode(a: Fraction) -> SdStream:
    """Canonical signed-digit stream of a rational ``a`` in [-1, 1].

    Emits +1 when the remainder is >= 1/4, -1 when it is <= -1/4 and the
    delay digit 0 otherwise, then recurses on ``2a - d``; the remainder stays
    in [-1, 1], so ``|decode(encode(a), n) - a| <= 2**-n`` for every n.
    """
    if not -1 <= a <= 1:
        raise ValueError("not-in-unit-interval")
    den = a.denominator

    def step(num: int) -> tuple[int, int]:
        if 4 * num >= den:
            return 1, 2 * num - den
        if 4 * num <= -den:
            return -1, 2 * num + den
        return 0, 2 * num

    return unfold_sd(a.numerator, step)


def decode(u: SdStream, n: int) -> Fraction:
    """Partial sum ``sum(d_k * 2**-k, k=1..n)``; within 2**-n of the value."""
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    acc = 0
    cell = u
    for _ in range(n):
        cell = cell.force()
        acc = 2 * acc + cell.head
        cell = cell.tail
    return Fraction(acc, 1 << n)


def one() -> SdStream:
    """The constant stream of +1, denoting 1."""
    return _ONE


def negate(u: SdStream) -> SdStream:
    """Digitwise negation; denotes ``-x``."""

    def step(cell: SdStream) -> tuple[int, SdStream]:
        c = cell.force()
        return -c.head, c.tail

    return unfold_sd(u, step)


def half(u: SdStream) -> SdStream:
    """Prepend the delay digit; denotes ``x/2``."""
    return SdStream.cons(0, u)


def add_one(u: SdStream) -> SdStream:
    """Denotes ``x + 1`` for ``x <= 0``.

    Digit equations: ``add_one(+1::u) = one()``, ``add_one(0::u) =
    +1::add_one(u)``, ``add_one(-1::u) = +1::u``.
    """

    def step(cell: SdStream) -> tuple[int, object]:
        c = cell.force()
        d = c.head
        if d == 0:
            return 1, c.tail
        if d == -1:
            return 1, Splice(c.tail)
        return 1, Splice(_ONE)

    return unfold_sd(u, step)


def sub_one(u: SdStream) -> SdStream:
    """Denotes ``x - 1`` for ``x >= 0`` (mirror equations of add_one)."""

    def step(cell: SdStream) -> tuple[int, object]:
        c = cell.force()
        d = c.head
        if d == 0:
            return -1, c.tail
        if d == 1:
            return -1, Splice(c.tail)
        return -1, Splice(_MINUS_ONE)

    return unfold_sd(u, step)


def double(u: SdStream) -> SdStream:
    """Denotes ``2x`` for ``|x| <= 1/2``.

    Dispatches on the first digit: ``double(+1::u) = add_one(u)``,
    ``double(0::u) = u``, ``double(-1::u) = sub_one(u)``.
    """

    def select() -> SdStream:
        c = u.force()
        d = c.head
        if d == 0:
            return c.tail
        if d == 1:
            return add_one(c.tail)
        return sub_one(c.tail)

    return SdStream.defer(select)


def average(u: SdStream, v: SdStream) -> SdStream:
    """Denotes ``(x + y)/2``; needs n+1 digits of each input for n digits.

    Carry automaton: after reading the leading digits the carry is their sum
    ``i in [-2, 2]``; each step reads one more digit from both inputs, forms
    ``k = 2i + a' + b' in [-6, 6]``, emits +1 / -1 / 0 as k >= 2 / k <= -2 /
    else, and keeps carry ``k - 4d``.  The pending value is always
    ``(i + x' + y')/4``, which stays in [-1, 1].
    """

    def digits() -> Iterator[int]:
        cu = u.force()
        cv = v.force()
        carry = cu.head + cv.head
        cu = cu.tail
        cv = cv.tail
        while True:
            cu = cu.force()
            cv = cv.force()
            k = 2 * carry + cu.head + cv.head
            if k >= 2:
                d = 1
            elif k <= -2:
                d = -1
            else:
                d = 0
            carry = k - 4 * d
            cu = cu.tail
            cv = cv.tail
            yield d

    return stream_from_digits(digits())


def twice_minus(u: SdStream, v: SdStream) -> SdStream:
    """Denotes ``2x - y`` under ``1/4 <= y``, ``0 <= x <= y``.

    Built as ``double(double(average(u, half(negate(v)))))``; the average
    argument is ``(2x - y)/4``, which has magnitude <= 1/4, so both
    doublings stay in range.
    """
    return double(double(average(u, half(negate(v)))))


def twice_plus(u: SdStream, v: SdStream) -> SdStream:
    """Denotes ``2x + y`` under ``1/4 <= y``, ``-y <= x <= 0``."""
    return double(double(average(u, half(v))))


def divide(u: SdStream, v: SdStream) -> SdStream:
    """Denotes ``x/y`` under ``1/4 <= y`` and ``|x| <= y``.

    Each output digit inspects up to three digits of the current numerator:
    leading ``1``, ``01`` or ``001`` emit +1 and continue on ``2x - y``;
    ``000`` emits the delay digit and continues on ``2x``; the mirrored
    patterns emit -1 and continue on ``2x + y``.  Producing n digits reads
    at most ``3n`` digits of ``u`` and ``3n - 1`` digits of ``v``.

    The numerator layers are forced bottom-up (three digits per layer and
    step, exactly the stated look-ahead) so that demanding a late digit
    never recurses through the whole tower of intermediate streams.
    """
    neg_half_v = half(negate(v))
    pos_half_v = half(v)

    def digits() -> Iterator[int]:
        layers: list[list] = []
        top = u
        while True:
            layers.append([top, 0])
            steps = len(layers)
            for j, entry in enumerate(layers):
                _advance(entry, 3 * (steps - j))
            c1 = top.force()
            lead = c1.head
            if lead == 0:
                c2 = c1.tail.force()
                lead = c2.head
                if lead == 0:
                    lead = c2.tail.force().head
            if lead == 1:
                yield 1
                top = double(double(average(top, neg_half_v)))
            elif lead == -1:
                yield -1
                top = double(double(average(top, pos_half_v)))
            else:
                yield 0
                top = double(top)

    return stream_from_digits(digits())


def _advance(entry: list, target: int) -> None:
    cell, count = entry
    while count < target:
        cell = cell.force().tail
        count += 1
    entry[0] = cell
    entry[1] = count


_ONE = SdStream.constant(1)
_MINUS_ONE = SdStream.constant(-1)
