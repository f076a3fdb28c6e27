from qdfao.qexact.qexact import (
    beatty_floor,
    cf_expand,
    complete_quotient,
    digit,
    expansion,
    format_expansion,
    isqrt,
    parse_quadratic,
)

__all__ = [
    "beatty_floor",
    "cf_expand",
    "complete_quotient",
    "digit",
    "expansion",
    "format_expansion",
    "isqrt",
    "parse_quadratic",
]
