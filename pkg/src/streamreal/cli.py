"""Command-line front end: encoding, operations, division and the benchmark.

Wire formats
    signed digits   one character per digit: ``+`` ``0`` ``-`` (e.g. ``+000``)
    Gray code       space-separated tokens: ``R``/``L`` (mode-G sign +1/-1),
                    ``Fr``/``Fl`` (mode-H sign +1/-1), ``U``/``D`` (delays)

Exit codes: 0 success, 2 parse error, 3 precondition violation.  Digit
output goes to standard output, one result per line; ``--stats`` adds a
trailing ``key=value`` report line.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import gray_ops, sd_ops
from .digits import format_rational, parse_rational
from .kernel import take_gray_prefix, take_prefix, with_force_count, with_force_count_gray

BENCH_NUMERATOR = Fraction(1001, 3001)
BENCH_DENOMINATOR = Fraction(10001, 20001)

_SD_CHARS = {1: "+", 0: "0", -1: "-"}
_SD_DIGITS = {"+": 1, "0": 0, "-": -1}
_GRAY_TOKENS = {("g", 1): "R", ("g", -1): "L", ("g", None): "U",
                ("h", 1): "Fr", ("h", -1): "Fl", ("h", None): "D"}
_GRAY_CONSTRUCTORS = {token: kind for kind, token in _GRAY_TOKENS.items()}


class CliFailure(Exception):
    """Carries the exit code and message for a failed command."""

    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def sd_to_text(digits: list[int]) -> str:
    return "".join(_SD_CHARS[d] for d in digits)


def text_to_sd(text: str) -> list[int]:
    try:
        return [_SD_DIGITS[ch] for ch in text]
    except KeyError as exc:
        raise ValueError(f"not a signed-digit string: {text!r}") from exc


def gray_to_text(prefix: list[tuple[str, int | None]]) -> str:
    return " ".join(_GRAY_TOKENS[entry] for entry in prefix)


def text_to_gray(text: str) -> list[tuple[str, int | None]]:
    out = []
    for token in text.split():
        if token not in _GRAY_CONSTRUCTORS:
            raise ValueError(f"not a Gray-code token: {token!r}")
        out.append(_GRAY_CONSTRUCTORS[token])
    return out


@dataclass(frozen=True)
class RunReport:
    """Observables of one instrumented run."""

    digits_produced: int
    u_forced: int | None
    v_forced: int | None
    elapsed: float
    decoded_value: Fraction
    exact_value: Fraction
    error_bound_ok: bool

    @classmethod
    def build(cls, digits_produced, u_forced, v_forced, elapsed, decoded, exact):
        bound_ok = abs(decoded - exact) <= Fraction(1, 1 << digits_produced)
        return cls(digits_produced, u_forced, v_forced, elapsed, decoded, exact, bound_ok)

    def as_line(self) -> str:
        parts = [f"digits-produced={self.digits_produced}"]
        if self.u_forced is not None:
            parts.append(f"u-forced={self.u_forced}")
        if self.v_forced is not None:
            parts.append(f"v-forced={self.v_forced}")
        parts.append(f"elapsed={self.elapsed:.6f}")
        parts.append(f"decoded-value={format_rational(self.decoded_value)}")
        parts.append(f"exact-value={format_rational(self.exact_value)}")
        parts.append(f"error-bound-ok={'true' if self.error_bound_ok else 'false'}")
        return " ".join(parts)


def _parse_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise CliFailure(2, f"error: {exc}") from exc


def _require(condition: bool, inequality: str) -> None:
    if not condition:
        raise CliFailure(3, f"precondition violated: {inequality}")


def _require_unit(a: Fraction, name: str) -> None:
    _require(-1 <= a <= 1, f"-1 <= {name} <= 1 ({name} = {format_rational(a)})")


def _cmd_encode(args) -> int:
    a = _parse_arg(args.value)
    _require_unit(a, "a")
    if args.code == "sd":
        print(sd_to_text(take_prefix(sd_ops.encode(a), args.digits)))
    else:
        print(gray_to_text(take_gray_prefix(gray_ops.encode(a), args.digits)))
    return 0


_UNARY_EXACT = {
    "neg": lambda a: -a,
    "half": lambda a: a / 2,
    "double": lambda a: 2 * a,
    "add1": lambda a: a + 1,
    "sub1": lambda a: a - 1,
    "convert": lambda a: a,
}

_SD_UNARY = {
    "neg": sd_ops.negate,
    "half": sd_ops.half,
    "double": sd_ops.double,
    "add1": sd_ops.add_one,
    "sub1": sd_ops.sub_one,
    "convert": lambda u: gray_ops.to_sd(gray_ops.from_sd(u)),
}

_GRAY_UNARY = {
    "neg": gray_ops.negate,
    "half": gray_ops.half,
    "double": gray_ops.double,
    "add1": gray_ops.add_one,
    "sub1": gray_ops.sub_one,
    "convert": lambda g: g,
}


def _check_op_preconditions(name: str, values: list[Fraction]) -> None:
    a = values[0]
    _require_unit(a, "a")
    if name == "avg":
        _require_unit(values[1], "b")
    elif name == "double":
        _require(abs(a) <= Fraction(1, 2), f"|a| <= 1/2 (a = {format_rational(a)})")
    elif name == "add1":
        _require(a <= 0, f"a <= 0 (a = {format_rational(a)})")
    elif name == "sub1":
        _require(a >= 0, f"0 <= a (a = {format_rational(a)})")


def _cmd_op(args) -> int:
    values = [_parse_arg(text) for text in args.values]
    name = args.name
    if name == "avg":
        if len(values) != 2:
            raise CliFailure(2, "error: avg needs exactly two rationals")
    elif len(values) != 1:
        raise CliFailure(2, f"error: {name} needs exactly one rational")
    _check_op_preconditions(name, values)
    n = args.digits
    exact = (values[0] + values[1]) / 2 if name == "avg" else _UNARY_EXACT[name](values[0])

    if args.code == "sd":
        inputs = [with_force_count(sd_ops.encode(a)) for a in values]
        streams = [s for s, _ in inputs]
        if name == "avg":
            result = sd_ops.average(*streams)
        else:
            result = _SD_UNARY[name](streams[0])
        start = time.perf_counter()
        text = sd_to_text(take_prefix(result, n))
        elapsed = time.perf_counter() - start
        decoded = sd_ops.decode(result, n)
    else:
        inputs = [with_force_count_gray(gray_ops.encode(a)) for a in values]
        codes = [g for g, _ in inputs]
        if name == "avg":
            result = gray_ops.average(*codes)
        else:
            result = _GRAY_UNARY[name](codes[0])
        start = time.perf_counter()
        text = gray_to_text(take_gray_prefix(result, n))
        elapsed = time.perf_counter() - start
        decoded = gray_ops.decode(result, n)

    print(text)
    if args.stats:
        counts = [counter.count for _, counter in inputs]
        report = RunReport.build(
            n,
            counts[0] if counts else None,
            counts[1] if len(counts) > 1 else None,
            elapsed,
            decoded,
            exact,
        )
        print(report.as_line())
    return 0


def _check_div_preconditions(x: Fraction, y: Fraction) -> None:
    _require(Fraction(1, 4) <= y, f"1/4 <= y (y = {format_rational(y)})")
    _require(y <= 1, f"y <= 1 (y = {format_rational(y)})")
    _require(abs(x) <= y, f"|x| <= y (x = {format_rational(x)}, y = {format_rational(y)})")


def _cmd_div(args) -> int:
    x = _parse_arg(args.numerator)
    y = _parse_arg(args.denominator)
    _check_div_preconditions(x, y)
    n = args.digits
    exact = x / y

    if args.code == "sd":
        u, cu = with_force_count(sd_ops.encode(x))
        v, cv = with_force_count(sd_ops.encode(y))
        result = sd_ops.divide(u, v)
        start = time.perf_counter()
        text = sd_to_text(take_prefix(result, n))
        elapsed = time.perf_counter() - start
        decoded = sd_ops.decode(result, n)
    else:
        g, cu = with_force_count_gray(gray_ops.encode(x))
        h, cv = with_force_count_gray(gray_ops.encode(y))
        result = gray_ops.divide(g, h)
        start = time.perf_counter()
        text = gray_to_text(take_gray_prefix(result, n))
        elapsed = time.perf_counter() - start
        decoded = gray_ops.decode(result, n)

    print(text)
    if args.stats:
        report = RunReport.build(n, cu.count, cv.count, elapsed, decoded, exact)
        print(report.as_line())
    return 0


def _parse_digit_list(text: str) -> list[int]:
    try:
        counts = [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise CliFailure(2, f"error: cannot parse digit list: {text!r}") from exc
    if not counts:
        raise CliFailure(2, f"error: empty digit list: {text!r}")
    if any(c <= 0 for c in counts):
        raise CliFailure(3, "precondition violated: digit counts must be positive")
    if any(a >= b for a, b in zip(counts, counts[1:])):
        raise CliFailure(3, "precondition violated: digit counts must be ascending")
    return counts


def _time_division(n: int, code: str) -> float:
    if code == "sd":
        result = sd_ops.divide(sd_ops.encode(BENCH_NUMERATOR), sd_ops.encode(BENCH_DENOMINATOR))
        start = time.perf_counter()
        take_prefix(result, n)
        return time.perf_counter() - start
    result = gray_ops.divide(gray_ops.encode(BENCH_NUMERATOR), gray_ops.encode(BENCH_DENOMINATOR))
    start = time.perf_counter()
    take_gray_prefix(result, n)
    return time.perf_counter() - start


def _cmd_bench(args) -> int:
    counts = _parse_digit_list(args.digits)
    times = []
    for n in counts:
        elapsed = _time_division(n, args.code)
        times.append(elapsed)
        print(f"digits={n} elapsed={elapsed:.6f}")
    if len(counts) > 1:
        t_lo = max(times[0], 1e-9)
        t_hi = max(times[-1], 1e-9)
        exponent = math.log(t_hi / t_lo) / math.log(counts[-1] / counts[0])
        print(f"growth-exponent={exponent:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streamreal",
        description="Exact real arithmetic on signed-digit and Gray-coded streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, digits_default: int) -> None:
        p.add_argument("--digits", type=int, default=digits_default,
                       help="number of output symbols")
        p.add_argument("--code", choices=("sd", "gray"), default="sd",
                       help="output coding (default sd)")

    p_encode = sub.add_parser("encode", help="print the canonical code of a rational")
    p_encode.add_argument("value", help="rational in [-1,1], e.g. 1/2 or -3/4")
    common(p_encode, 16)
    p_encode.set_defaults(func=_cmd_encode)

    p_op = sub.add_parser("op", help="apply a stream operation to rational inputs")
    p_op.add_argument("name", choices=("neg", "half", "double", "add1", "sub1", "avg", "convert"))
    p_op.add_argument("values", nargs="+", help="one rational (two for avg)")
    common(p_op, 16)
    p_op.add_argument("--stats", action="store_true", help="append a run report line")
    p_op.set_defaults(func=_cmd_op)

    p_div = sub.add_parser("div", help="divide two rationals digit by digit")
    p_div.add_argument("numerator")
    p_div.add_argument("denominator")
    common(p_div, 19)
    p_div.add_argument("--stats", action="store_true", help="append a run report line")
    p_div.set_defaults(func=_cmd_div)

    p_bench = sub.add_parser("bench", help="time the division benchmark at growing digit counts")
    p_bench.add_argument("--digits", default="10,100,1000",
                         help="comma-separated ascending digit counts")
    p_bench.add_argument("--code", choices=("sd", "gray"), default="sd")
    p_bench.set_defaults(func=_cmd_bench)

    # a leading-dash rational like -3/4 must parse as a positional, not an option
    negative_rational = re.compile(r"^-\d+(/\d+)?$")
    for p in (parser, p_encode, p_op, p_div, p_bench):
        p._negative_number_matcher = negative_rational

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as failure:
        print(failure, file=sys.stderr)
        return failure.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
