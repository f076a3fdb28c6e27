# qdfao/qexact/qexact.py
"""
Exact arithmetic on quadratic irrationals, and the big-integer oracle for Beatty values
floor(n q) and base-b digits.

Nothing here touches floating point: every floor goes through math.isqrt.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterator

from qdfao.models.continued_fraction import ContinuedFraction
from qdfao.models.qdfao_errors import QdfaoError, QdfaoInputError, QdfaoParseError
from qdfao.models.quadratic_irrational import QuadraticIrrational
from qdfao.utils.surd_utils import floor_surd
from qdfao.utils.str_utils import digit_char, int_to_base

MAX_CF_STEPS = 1_000_000

_TERM_PATTERN = re.compile(
    r"^(?:(?P<a>[+-]?\d+)(?P<op>[+-]))?(?P<bsign>[+-])?(?:(?P<b>\d+)\*?)?sqrt\((?P<d>\d+)\)(?:/(?P<sc>\d+))?$"
)
_GROUPED_PATTERN = re.compile(r"^\((?P<inner>.*)\)(?:/(?P<c>\d+))?$")


def isqrt(n: int) -> int:
    if n < 0:
        raise QdfaoInputError(f"isqrt of a negative number: {n}")
    return math.isqrt(n)


def parse_quadratic(text: str) -> QuadraticIrrational:
    """
    Reads `(a+b*sqrt(d))/c` and the usual shortenings: `sqrt(2)`, `1+sqrt(3)`, `(-3+sqrt(17))/4`,
    `(3+2*sqrt(2))/7`, `sqrt(2)/2`. Whitespace is ignored.

    A trailing `/c` divides the whole value only when the numerator is in parentheses:
    `1+sqrt(5)/2` is 1 + sqrt(5)/2, not the golden ratio.
    """
    compact = "".join(text.split())
    if compact.count("(") != compact.count(")"):
        raise QdfaoParseError("unbalanced parentheses", text=text)
    c = 1
    numerator = compact
    grouped = _GROUPED_PATTERN.match(compact)
    if grouped and _TERM_PATTERN.match(grouped.group("inner")):
        numerator = grouped.group("inner")
        c = int(grouped.group("c")) if grouped.group("c") else 1
    m = _TERM_PATTERN.match(numerator)
    if not m:
        pos = compact.find("sqrt")
        raise QdfaoParseError("expected (a+b*sqrt(d))/c", text=text, position=pos if pos >= 0 else 0)
    if m.group("op") and m.group("bsign"):
        raise QdfaoParseError("two signs before sqrt", text=text, position=compact.find("sqrt"))
    a = int(m.group("a")) if m.group("a") else 0
    b = int(m.group("b")) if m.group("b") else 1
    if (m.group("op") or m.group("bsign")) == "-":
        b = -b
    # a + b sqrt(d) / sc = (a sc + b sqrt(d)) / sc
    sc = int(m.group("sc")) if m.group("sc") else 1
    return QuadraticIrrational(a=a * sc, b=b, d=int(m.group("d")), c=c * sc)


def beatty_floor(n: int, q: QuadraticIrrational) -> int:
    """floor(n q), exact"""
    if n < 0:
        raise QdfaoInputError(f"n must be non-negative, got {n}")
    return q.scaled_floor(n)


def digit(n: int, b: int, q: QuadraticIrrational) -> int:
    """The n'th base-b digit after the point: floor(b^(n+1) q) - b floor(b^n q)."""
    if b < 2:
        raise QdfaoInputError(f"base must be at least 2, got {b}")
    if n < 0:
        raise QdfaoInputError(f"digit index must be non-negative, got {n}")
    p = b**n
    return beatty_floor(p * b, q) - b * beatty_floor(p, q)


def expansion(q: QuadraticIrrational, b: int, count: int) -> tuple[int, list[int]]:
    """Integer part and the first `count` base-b digits after the point, from a single big floor."""
    if b < 2:
        raise QdfaoInputError(f"base must be at least 2, got {b}")
    if count < 0:
        raise QdfaoInputError(f"count must be non-negative, got {count}")
    int_part = q.floor()
    scale = b**count
    frac = q.scaled_floor(scale) - int_part * scale
    return int_part, _fixed_width_digits(frac, b, count)


def _fixed_width_digits(value: int, b: int, width: int) -> list[int]:
    if width == 0:
        return []
    if b == 10:
        return [int(ch) for ch in str(value).zfill(width)]
    if b == 2:
        return [int(ch) for ch in bin(value)[2:].zfill(width)]
    # chunked divmod keeps the big-integer work proportional to width / chunk
    chunk = max(1, 60 // max(1, (b - 1).bit_length()))
    big = b**chunk
    out: list[int] = []
    remaining = width
    while remaining > 0:
        value, low = divmod(value, big)
        take = min(chunk, remaining)
        for _ in range(take):
            low, r = divmod(low, b)
            out.append(r)
        remaining -= take
    out.reverse()
    return out


def format_expansion(q: QuadraticIrrational, b: int, count: int) -> str:
    """`<integer part in base b>.<count digits>`, e.g. 1.1001111000110111 for phi in base 2."""
    int_part, digits = expansion(q, b, count)
    head = int_to_base(int_part, b) if int_part >= 0 else "-" + int_to_base(-int_part, b)
    body = "".join(digit_char(d, b) for d in digits)
    return f"{head}.{body}" if count else head


# --------------------------------------------------------------------------------------------------
# Continued fractions
# --------------------------------------------------------------------------------------------------
def _surd_states(q: QuadraticIrrational) -> Iterator[tuple[int, int, int, int]]:
    """
    Yields (P_k, Q_k, D, d_k) where the k'th complete quotient is (P_k + sqrt(D)) / Q_k and
    d_k its floor. Q_k divides D - P_k^2 at every step, so the updates stay in integers.
    """
    if q.b > 0:
        p, radicand, den = q.a, q.b * q.b * q.d, q.c
    else:
        p, radicand, den = -q.a, q.b * q.b * q.d, -q.c
    if (radicand - p * p) % den:
        p, radicand, den = p * abs(den), radicand * den * den, den * abs(den)
    while True:
        if den > 0:
            dk = floor_surd(p, 1, radicand, den)
        else:
            dk = floor_surd(-p, -1, radicand, -den)
        yield p, den, radicand, dk
        p = dk * den - p
        den = (radicand - p * p) // den


def cf_expand(q: QuadraticIrrational) -> ContinuedFraction:
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    for k, (p, den, _radicand, dk) in enumerate(_surd_states(q)):
        if k >= MAX_CF_STEPS:
            break
        if k >= 1:
            key = (p, den)
            if key in seen:
                j = seen[key]
                return ContinuedFraction(preperiod=tuple(digits[:j]), period=tuple(digits[j:]))
            seen[key] = k
        digits.append(dk)
    raise QdfaoError(f"no period found for {q} within {MAX_CF_STEPS} steps")


def complete_quotient(q: QuadraticIrrational, k: int) -> QuadraticIrrational:
    """The k'th complete quotient x_k, so that q = [d0; d1, ..., d_{k-1}, x_k]."""
    if k < 0:
        raise QdfaoInputError(f"k must be non-negative, got {k}")
    for i, (p, den, radicand, _dk) in enumerate(_surd_states(q)):
        if i == k:
            return QuadraticIrrational.from_surd(p, 1, radicand, den)
    raise QdfaoError("unreachable")  # pragma: no cover


def from_periodic_tail(q: QuadraticIrrational, start: int) -> QuadraticIrrational:
    """[0; d_start, d_start+1, ...] = 1 / x_start"""
    return complete_quotient(q, start).reciprocal()


if __name__ == "__main__":  # pragma: no cover
    phi = parse_quadratic("(1+sqrt(5))/2")
    print(phi, cf_expand(phi), format_expansion(phi, 2, 16))
