# qdfao/linrel/parser.py
"""
Text form of one linear relation: `<system>: <terms> = <constant>`, e.g.

    fib: x - 2y = 1
    ost[2,1]: shift2(w) - 3z - 2u = 0

`shiftK(v)` appends K zeros to v. Tapes are ordered by first appearance.
"""

from __future__ import annotations

import re

from qdfao.models.linear_relation import LinearRelation, RelationTerm
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoParseError

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*\*?\s*"
    r"(?:shift(?P<shift>\d+)\(\s*(?P<svar>[A-Za-z_]\w*)\s*\)|(?P<var>[A-Za-z_]\w*))\s*"
)
_HEAD = re.compile(r"^\s*(?P<system>fib|pell|ost\s*:?\s*\[[\d,\s]+\])\s*:(?P<body>.*)$")


def parse_relation(text: str) -> LinearRelation:
    m = _HEAD.match(text)
    if not m:
        raise QdfaoParseError("expected '<system>: <terms> = <constant>'", text=text, position=0)
    system = NumerationSystem.parse(m.group("system").replace(" ", ""))
    body = m.group("body")
    offset = m.start("body")
    if body.count("=") != 1:
        raise QdfaoParseError("expected exactly one '='", text=text, position=offset)
    lhs, rhs = body.split("=")
    try:
        constant = int(rhs.replace(" ", ""))
    except ValueError as e:
        raise QdfaoParseError("right side must be an integer", text=text, position=offset + len(lhs) + 1) from e

    tapes: list[str] = []
    terms: list[RelationTerm] = []
    pos = 0
    while pos < len(lhs.rstrip()):
        mt = _TERM.match(lhs, pos)
        if not mt or mt.end() == pos:
            raise QdfaoParseError("expected a term like 2x or shift1(u)", text=text, position=offset + pos)
        if terms and mt.group("sign") is None:
            raise QdfaoParseError("missing '+' or '-' between terms", text=text, position=offset + pos)
        coef = int(mt.group("coef")) if mt.group("coef") else 1
        if mt.group("sign") == "-":
            coef = -coef
        name = mt.group("svar") or mt.group("var")
        if name not in tapes:
            tapes.append(name)
        shift = int(mt.group("shift")) if mt.group("shift") else 0
        terms.append(RelationTerm(tape=tapes.index(name), coefficient=coef, shift=shift))
        pos = mt.end()
    if not terms:
        raise QdfaoParseError("no terms on the left side", text=text, position=offset)
    return LinearRelation(system=system, tapes=tuple(tapes), terms=tuple(terms), constant=constant)
