"""Gray-code (binary reflected) stream arithmetic on reals in [-1, 1].

The operation set mirrors :mod:`streamreal.sd_ops`; conversions between the
two codings are denotation-preserving automata, and the average is routed
through the signed-digit automaton.  Sign-node semantics: a mode-G node
``(s, g)`` denotes ``-s*(x_g - 1)/2`` (the reflected branch), a mode-H node
``(s, g)`` denotes ``s*(x_g + 1)/2``, and both delay constructors halve.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from . import sd_ops
from .kernel import GrayG, GrayH, GrayNode, SdStream, gray_from_signs, stream_from_digits


def _cyclic_sign(sign: int) -> GrayG:
    node = GrayG.__new__(GrayG)
    node.sign = sign
    node.rest = node
    node._thunk = None
    return node


_MINUS_ONE = _cyclic_sign(-1)
_ONE = GrayG.sign_node(1, _MINUS_ONE)


def one() -> GrayG:
    """The Gray code of the constant 1."""
    return _ONE


def minus_one() -> GrayG:
    """The Gray code of the constant -1."""
    return _MINUS_ONE


def encode(a: Fraction) -> GrayG:
    """Canonical Gray code of a rational in [-1, 1] (via the digit encoder)."""
    return from_sd(sd_ops.encode(a))


def decode(node: GrayNode, n: int) -> Fraction:
    """Midpoint after n constructors; within 2**-n of the denoted value.

    Walking n constructors composes n affine maps of slope +-1/2, confining
    the value to an interval of width 2**(1-n); the midpoint is returned
    exactly.
    """
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    a, b = 1, 0
    cur = node
    for _ in range(n):
        cur = cur.force()
        s = cur.sign
        if s is None:
            b = 2 * b
        elif cur.is_g:
            b = a * s + 2 * b
            a = -a * s
        else:
            b = a * s + 2 * b
            a = a * s
        cur = cur.rest
    return Fraction(b, 1 << n)


def negate(g: GrayG) -> GrayG:
    """Denotes ``-x``: flip the sign node's sign, recurse through delays.

    The continuation under a sign node is untouched -- both branch maps are
    reflections of each other around 0, so only the choice of branch flips.
    """

    def thunk() -> tuple:
        c = g.force()
        if c.sign is not None:
            return -c.sign, c.rest
        return None, negate_h(c.rest)

    return GrayG(thunk)


def negate_h(h: GrayH) -> GrayH:
    """Mode-H variant of :func:`negate`."""

    def thunk() -> tuple:
        c = h.force()
        if c.sign is not None:
            return -c.sign, c.rest
        return None, negate_h(c.rest)

    return GrayH(thunk)


def to_h(g: GrayG) -> GrayH:
    """Rewrite a mode-G code as a mode-H code of the same value.

    Single-constructor rewrite, no corecursion: a sign node keeps its sign
    and negates its continuation, a delay node switches delay flavour.
    """

    def thunk() -> tuple:
        c = g.force()
        if c.sign is not None:
            return c.sign, negate(c.rest)
        return None, c.rest

    return GrayH(thunk)


def to_g(h: GrayH) -> GrayG:
    """Inverse rewrite of :func:`to_h`."""

    def thunk() -> tuple:
        c = h.force()
        if c.sign is not None:
            return c.sign, negate(c.rest)
        return None, c.rest

    return GrayG(thunk)


def shift(g: GrayG, direction: int) -> GrayG:
    """For ``x <= 0``: code of ``x + 1`` (direction +1) or ``-(x + 1)`` (-1).

    Equations: a leading +1 sign forces ``x = 0`` and yields the constant
    code of ``direction``; a leading -1 sign yields ``(direction,
    negate(rest))``; a delay node re-enters through the mode-H shift of the
    converted continuation with direction -1.
    """

    def thunk() -> tuple:
        c = g.force()
        s = c.sign
        if s == 1:
            return direction, _MINUS_ONE
        if s == -1:
            return direction, negate(c.rest)
        return direction, shift(to_g(c.rest), -1)

    return GrayG(thunk)


def shift_h(h: GrayH, direction: int) -> GrayH:
    """Mode-H variant of :func:`shift` (same value, H constructors)."""

    def thunk() -> tuple:
        c = h.force()
        s = c.sign
        if s == 1:
            return direction, _ONE
        if s == -1:
            return direction, negate(c.rest)
        return direction, shift(to_g(c.rest), 1)

    return GrayH(thunk)


def add_one(g: GrayG) -> GrayG:
    """Denotes ``x + 1`` for ``x <= 0``."""
    return shift(g, 1)


def sub_one(g: GrayG) -> GrayG:
    """Denotes ``x - 1`` for ``x >= 0``."""
    return shift(negate(g), -1)


def half(g: GrayG) -> GrayG:
    """Denotes ``x/2``: one delay constructor over the mode-H rewrite."""
    return GrayG.delay_node(to_h(g))


def double(g: GrayG) -> GrayG:
    """Denotes ``2x`` for ``|x| <= 1/2``.

    A sign node hands its negated continuation to :func:`shift` (the range
    bound puts that continuation below 0); a delay node unwraps to mode G.
    """

    def select() -> GrayG:
        c = g.force()
        s = c.sign
        if s == 1:
            return shift(negate(c.rest), 1)
        if s == -1:
            return shift(negate(c.rest), -1)
        return to_g(c.rest)

    return GrayG.defer(select)


def average(a: GrayG, b: GrayG) -> GrayG:
    """Denotes ``(x + y)/2``, routed through the signed-digit automaton."""
    return from_sd(sd_ops.average(to_sd(a), to_sd(b)))


def twice_minus(a: GrayG, b: GrayG) -> GrayG:
    """Denotes ``2x - y`` under ``1/4 <= y``, ``0 <= x <= y``."""
    return double(double(average(a, half(negate(b)))))


def twice_plus(a: GrayG, b: GrayG) -> GrayG:
    """Denotes ``2x + y`` under ``1/4 <= y``, ``-y <= x <= 0``."""
    return double(double(average(a, half(b))))


def _leading_sign(x: GrayG) -> tuple[int, GrayG | None]:
    """Classify the sign of ``x`` from up to three constructors.

    Returns ``(+1, None)`` / ``(-1, None)`` when a sign node appears among
    the first three constructors, else ``(0, code of 2x)`` for the all-delay
    prefix (there ``|x| <= 1/8``, so doubling is represented by stripping
    one delay).
    """
    c = x.force()
    if c.sign is not None:
        return c.sign, None
    h1 = c.rest.force()
    if h1.sign is not None:
        return h1.sign, None
    h2 = h1.rest.force()
    if h2.sign is not None:
        return h2.sign, None
    return 0, GrayG.delay_node(GrayH.delay_node(h2.rest))


def div_step(x: GrayG, y: GrayG) -> tuple[int, GrayG]:
    """One division step: a signed digit d and a numerator x' with
    ``x/y = ((x'/y) + d)/2`` and ``|x'| <= y``.

    Requires ``1/4 <= y`` and ``|x| <= y``.
    """
    d, replacement = _leading_sign(x)
    if d == 1:
        return 1, twice_minus(x, y)
    if d == -1:
        return -1, twice_plus(x, y)
    return 0, replacement


def divide(x: GrayG, y: GrayG) -> GrayG:
    """Denotes ``x/y`` under ``1/4 <= y`` and ``|x| <= y``.

    Two mutually corecursive producers drive :func:`div_step`; the emitted
    digit maps onto constructors mode by mode.  Mode G: +1 emits a sign node
    and continues (mode G) on the negated numerator, -1 continues on the
    numerator itself, 0 emits the delay and switches to mode H.  Mode H is
    the mirror image (+1 plain / -1 negated, both back to mode G).

    As in the signed-digit division, numerator layers are forced bottom-up,
    three constructors per layer and step.
    """
    sd_neg_half_y = to_sd(half(negate(y)))
    sd_pos_half_y = to_sd(half(y))

    def aux(g: GrayG, sd_other: SdStream) -> GrayG:
        return double(double(from_sd(sd_ops.average(to_sd(g), sd_other))))

    def signs() -> Iterator:
        layers: list[list] = []
        top = x
        in_g = True
        while True:
            layers.append([top, 0])
            steps = len(layers)
            for j, entry in enumerate(layers):
                _advance(entry, 3 * (steps - j))
            d, replacement = _leading_sign(top)
            if d == 1:
                nxt = aux(top, sd_neg_half_y)
            elif d == -1:
                nxt = aux(top, sd_pos_half_y)
            else:
                nxt = replacement
            if in_g:
                if d == 1:
                    yield 1
                    nxt = negate(nxt)
                elif d == -1:
                    yield -1
                else:
                    yield None
                    in_g = False
            else:
                if d == 1:
                    yield 1
                    in_g = True
                elif d == -1:
                    yield -1
                    nxt = negate(nxt)
                    in_g = True
                else:
                    yield None
            top = nxt

    return gray_from_signs(signs())


def _advance(entry: list, target: int) -> None:
    node, count = entry
    while count < target:
        node = node.force().rest
        count += 1
    entry[0] = node
    entry[1] = count


def from_sd(u: SdStream) -> GrayG:
    """Denotation-preserving conversion from a signed-digit stream.

    Two-mode automaton with a pending-negation flag standing in for the
    digitwise negation of the remaining stream: in mode G an effective +1
    branches and flips the flag, -1 branches plainly, 0 delays into mode H;
    in mode H the roles of +1 and -1 swap and delays stay in mode H.
    """

    def signs() -> Iterator:
        cell = u
        flag = 1
        in_g = True
        while True:
            cell = cell.force()
            d = cell.head
            if d == 0:
                yield None
                in_g = False
            else:
                fd = flag * d
                if in_g:
                    if fd == 1:
                        flag = -flag
                else:
                    if fd == -1:
                        flag = -flag
                    in_g = True
                yield fd
            cell = cell.tail

    return gray_from_signs(signs())


def to_sd(node: GrayNode) -> SdStream:
    """Inverse automaton of :func:`from_sd` (works from either mode)."""

    def digits() -> Iterator[int]:
        cur = node
        flag = 1
        while True:
            cur = cur.force()
            s = cur.sign
            if s is None:
                yield 0
            else:
                fs = flag * s
                flag = -fs if cur.is_g else fs
                yield fs
            cur = cur.rest

    return stream_from_digits(digits())
