"""Lazy, memoized codata cells for digit streams and Gray codes.

Streams are chains of cells with deferred tails, not index functions: every
algorithm in this library is a head/tail pattern matcher, and caching each
cell is what keeps the instrumented look-ahead linear instead of recomputing
prefixes.  A cell is forced at most once; forcing is serialized by a global
re-entrant lock so concurrent readers can share any forced prefix.

Two codata shapes live here:

* :class:`SdStream` -- an infinite stream of signed digits denoting
  ``x = sum(d_k * 2**-k) in [-1, 1]``.
* :class:`GrayG` / :class:`GrayH` -- mutually corecursive Gray-code nodes.
  A ``GrayG`` is either a sign node (sign s, rest g) denoting
  ``-s*(x_g - 1)/2`` or a delay node (rest h) denoting ``x_h/2``.  A
  ``GrayH`` is either a sign node denoting ``s*(x_g + 1)/2`` or a delay
  node denoting ``x_h/2``.
"""

from __future__ import annotations

import threading
from typing import Any, Callable, Iterator, NamedTuple, Union

from .digits import SignedDigit

_FORCE_LOCK = threading.RLock()


class Splice(NamedTuple):
    """Marks a corecursion step result that splices an existing stream."""

    stream: Any


class SdStream:
    """One cell of a lazy stream of signed digits.

    ``head``/``tail`` are plain attributes that become valid after
    :meth:`force` (all helpers in this package force before reading).
    """

    __slots__ = ("head", "tail", "_thunk")

    def __init__(self, thunk: Callable[[], tuple[SignedDigit, "SdStream"]]):
        self.head: SignedDigit = 0
        self.tail: "SdStream" = None  # type: ignore[assignment]
        self._thunk = thunk

    @classmethod
    def cons(cls, digit: SignedDigit, tail: "SdStream") -> "SdStream":
        cell = cls.__new__(cls)
        cell.head = digit
        cell.tail = tail
        cell._thunk = None
        return cell

    @classmethod
    def constant(cls, digit: SignedDigit) -> "SdStream":
        """Cyclic one-cell stream repeating ``digit`` forever (interned)."""
        cell = _CONSTANT_STREAMS.get(digit)
        if cell is None:
            cell = cls.__new__(cls)
            cell.head = digit
            cell.tail = cell
            cell._thunk = None
            _CONSTANT_STREAMS[digit] = cell
        return cell

    @classmethod
    def defer(cls, make: Callable[[], "SdStream"]) -> "SdStream":
        """Stream that delegates to ``make()`` on first force."""

        def thunk() -> tuple[SignedDigit, "SdStream"]:
            inner = make().force()
            return inner.head, inner.tail

        return cls(thunk)

    def force(self) -> "SdStream":
        if self._thunk is not None:
            with _FORCE_LOCK:
                thunk = self._thunk
                if thunk is not None:
                    head, tail = thunk()
                    self.head = head
                    self.tail = tail
                    self._thunk = None
        return self

    def uncons(self) -> tuple[SignedDigit, "SdStream"]:
        cell = self.force()
        return cell.head, cell.tail

    def __repr__(self) -> str:  # pragma: no cover - debug display only
        if self._thunk is not None:
            return "SdStream(<unforced>)"
        return f"SdStream({self.head}, ...)"


_CONSTANT_STREAMS: dict = {}


# The recursive cell builders below live at module level on purpose: a
# nested builder that mentions itself would close over its own cell and
# form a reference cycle, pinning every stream it reaches until a cyclic
# collection.  As globals, the whole forced pyramid dies by refcounting.

def _iter_cell(pull: Callable[[], int]) -> SdStream:
    def thunk() -> tuple[SignedDigit, SdStream]:
        return pull(), _iter_cell(pull)

    return SdStream(thunk)


def stream_from_digits(digits: Iterator[int]) -> SdStream:
    """Stream pulling one digit per forced cell from ``digits``.

    The iterator is advanced only when a new cell is forced, so generators
    passed here stay as lazy as the corecursion they implement.
    """
    return _iter_cell(digits.__next__)


def _unfold_sd_cell(step: Callable[[Any], tuple[SignedDigit, Any]], state: Any) -> SdStream:
    def thunk() -> tuple[SignedDigit, SdStream]:
        digit, nxt = step(state)
        if type(nxt) is Splice:
            return digit, nxt.stream
        return digit, _unfold_sd_cell(step, nxt)

    return SdStream(thunk)


def unfold_sd(seed: Any, step: Callable[[Any], tuple[SignedDigit, Any]]) -> SdStream:
    """Corecursion operator for signed-digit streams.

    ``step`` maps a state to ``(digit, next)`` where ``next`` is either
    ``Splice(stream)`` -- splicing an existing stream in place of further
    corecursion -- or the next state.  ``step`` must be total on states
    reachable from ``seed``.
    """
    return _unfold_sd_cell(step, seed)


def take_prefix(u: SdStream, n: int) -> list[SignedDigit]:
    """First ``n`` digits of ``u``; forces exactly ``n`` cells."""
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    out = []
    cell = u
    for _ in range(n):
        cell = cell.force()
        out.append(cell.head)
        cell = cell.tail
    return out


def tail_at(u: SdStream, n: int) -> SdStream:
    """The stream left after dropping the first ``n`` digits."""
    cell = u
    for _ in range(n):
        cell = cell.force().tail
    return cell


class ForceCount:
    """Shared monotone tally of cells forced through a counting wrapper."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


def _counted_sd_cell(counter: "ForceCount", cell: SdStream) -> SdStream:
    def thunk() -> tuple[SignedDigit, SdStream]:
        src = cell.force()
        counter.count += 1
        return src.head, _counted_sd_cell(counter, src.tail)

    return SdStream(thunk)


def with_force_count(u: SdStream) -> tuple[SdStream, ForceCount]:
    """Wrap ``u`` so the returned counter tracks constructors forced on it.

    The wrapper behaves identically to ``u``; its own cells are memoized, so
    re-reading a forced prefix does not inflate the tally.
    """
    counter = ForceCount()
    return _counted_sd_cell(counter, u), counter


class GrayG:
    """Gray-code node in mode G: sign node ``(s, rest_g)`` or delay ``U(rest_h)``.

    ``sign`` is +1/-1 for a sign node and ``None`` for the delay constructor;
    ``rest`` is a ``GrayG`` under a sign node and a ``GrayH`` under a delay.
    """

    __slots__ = ("sign", "rest", "_thunk")
    is_g = True

    def __init__(self, thunk: Callable[[], tuple[Any, Any]]):
        self.sign: Any = None
        self.rest: Any = None
        self._thunk = thunk

    @classmethod
    def sign_node(cls, sign: int, rest: "GrayG") -> "GrayG":
        if sign not in (-1, 1):
            raise ValueError(f"not a proper digit: {sign!r}")
        node = cls.__new__(cls)
        node.sign = sign
        node.rest = rest
        node._thunk = None
        return node

    @classmethod
    def delay_node(cls, rest: "GrayH") -> "GrayG":
        node = cls.__new__(cls)
        node.sign = None
        node.rest = rest
        node._thunk = None
        return node

    @classmethod
    def defer(cls, make: Callable[[], "GrayG"]) -> "GrayG":
        def thunk() -> tuple[Any, Any]:
            inner = make().force()
            return inner.sign, inner.rest

        return cls(thunk)

    def force(self) -> "GrayG":
        if self._thunk is not None:
            with _FORCE_LOCK:
                thunk = self._thunk
                if thunk is not None:
                    sign, rest = thunk()
                    self.sign = sign
                    self.rest = rest
                    self._thunk = None
        return self

    def __repr__(self) -> str:  # pragma: no cover - debug display only
        if self._thunk is not None:
            return "GrayG(<unforced>)"
        return f"GrayG(sign={self.sign}, ...)"


class GrayH:
    """Gray-code node in mode H: sign node ``(s, rest_g)`` or delay ``D(rest_h)``."""

    __slots__ = ("sign", "rest", "_thunk")
    is_g = False

    def __init__(self, thunk: Callable[[], tuple[Any, Any]]):
        self.sign: Any = None
        self.rest: Any = None
        self._thunk = thunk

    @classmethod
    def sign_node(cls, sign: int, rest: GrayG) -> "GrayH":
        if sign not in (-1, 1):
            raise ValueError(f"not a proper digit: {sign!r}")
        node = cls.__new__(cls)
        node.sign = sign
        node.rest = rest
        node._thunk = None
        return node

    @classmethod
    def delay_node(cls, rest: "GrayH") -> "GrayH":
        node = cls.__new__(cls)
        node.sign = None
        node.rest = rest
        node._thunk = None
        return node

    @classmethod
    def defer(cls, make: Callable[[], "GrayH"]) -> "GrayH":
        def thunk() -> tuple[Any, Any]:
            inner = make().force()
            return inner.sign, inner.rest

        return cls(thunk)

    def force(self) -> "GrayH":
        if self._thunk is not None:
            with _FORCE_LOCK:
                thunk = self._thunk
                if thunk is not None:
                    sign, rest = thunk()
                    self.sign = sign
                    self.rest = rest
                    self._thunk = None
        return self

    def __repr__(self) -> str:  # pragma: no cover - debug display only
        if self._thunk is not None:
            return "GrayH(<unforced>)"
        return f"GrayH(sign={self.sign}, ...)"


GrayNode = Union[GrayG, GrayH]


def _unfold_gray_cell(step_g, step_h, state: Any, in_g: bool) -> GrayNode:
    def thunk() -> tuple[Any, Any]:
        sign, nxt = (step_g if in_g else step_h)(state)
        if type(nxt) is Splice:
            return sign, nxt.stream
        return sign, _unfold_gray_cell(step_g, step_h, nxt, sign is not None)

    return GrayG(thunk) if in_g else GrayH(thunk)


def unfold_gray(
    seed: Any,
    step_g: Callable[[Any], tuple[Any, Any]],
    step_h: Callable[[Any], tuple[Any, Any]],
    start_in_g: bool = True,
) -> GrayNode:
    """Simultaneous corecursion over the two Gray-code modes.

    Each step maps a state to ``(sign, next)``.  A proper-digit sign emits a
    sign node whose rest is mode G; ``sign is None`` emits a delay node whose
    rest is mode H.  ``next`` is ``Splice(node)`` of the matching mode, or
    the state handed to ``step_g``/``step_h`` accordingly.
    """
    return _unfold_gray_cell(step_g, step_h, seed, start_in_g)


def _sign_cell(pull: Callable[[], Any], in_g: bool) -> GrayNode:
    def thunk() -> tuple[Any, Any]:
        s = pull()
        return s, _sign_cell(pull, s is not None)

    return GrayG(thunk) if in_g else GrayH(thunk)


def gray_from_signs(signs: Iterator[Any], start_in_g: bool = True) -> GrayNode:
    """Assemble Gray nodes from a sign sequence (``None`` marks a delay).

    Mode bookkeeping follows the constructor types: the rest of a sign node
    is mode G, the rest of a delay node is mode H.
    """
    return _sign_cell(signs.__next__, start_in_g)


def take_gray_prefix(node: GrayNode, n: int) -> list[tuple[str, Any]]:
    """First ``n`` constructors as ``(mode, sign)`` pairs, forcing exactly n.

    ``mode`` is ``"g"`` or ``"h"``; ``sign`` is +1/-1 or ``None`` for the
    delay constructors.
    """
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    out = []
    cur = node
    for _ in range(n):
        cur = cur.force()
        out.append(("g" if cur.is_g else "h", cur.sign))
        cur = cur.rest
    return out


def _counted_gray_cell(counter: ForceCount, node: GrayNode, in_g: bool) -> GrayNode:
    def thunk() -> tuple[Any, Any]:
        src = node.force()
        counter.count += 1
        return src.sign, _counted_gray_cell(counter, src.rest, src.sign is not None)

    return GrayG(thunk) if in_g else GrayH(thunk)


def with_force_count_gray(node: GrayG) -> tuple[GrayG, ForceCount]:
    """Gray analogue of :func:`with_force_count`."""
    counter = ForceCount()
    return _counted_gray_cell(counter, node, True), counter
