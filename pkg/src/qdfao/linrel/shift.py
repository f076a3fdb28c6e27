# qdfao/linrel/shift.py
from __future__ import annotations

from enum import StrEnum

from qdfao.automata.algebra import join_tapes, minimize
from qdfao.automata.dfao import Dfa
from qdfao.automata.regex import regex_to_dfa
from qdfao.linrel.relation_builder import relation_alphabet, relation_dfa
from qdfao.linrel.shift_patterns import SHIFT_PATTERNS
from qdfao.models.linear_relation import LinearRelation
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoUnsupportedError
from qdfao.numeration.validity import validity_dfa


class ShiftMethod(StrEnum):
    RELATION = "relation"
    REGEX = "regex"
    STRING = "string"


def string_shift_dfa(sys: NumerationSystem) -> Dfa:
    """
    Pairs (u, v) of digit strings with v = u0, no validity check. The state is the digit
    just read on v, which the next digit of u has to repeat.
    """
    alphabet = relation_alphabet(sys, 2)
    size = sys.max_digit + 1
    delta = [{alphabet.encode((state, b)): b for b in range(size)} for state in range(size)]
    return minimize(Dfa(alphabet, delta, [state == 0 for state in range(size)]))


def _with_valid_tapes(sys: NumerationSystem, dfa: Dfa) -> Dfa:
    valid = validity_dfa(sys)
    for tape in (0, 1):
        dfa = join_tapes(dfa, [0, 1], valid, [tape], dfa.alphabet)
    return dfa


def shift_relation(sys: NumerationSystem, shift: int = 1) -> LinearRelation:
    """val(v) = val(shift^k(u))"""
    return LinearRelation.of(sys, {"u": 1, "v": -1}, 0, shifts={"u": shift})


def shift_dfa(sys: NumerationSystem, method: ShiftMethod | str = ShiftMethod.RELATION) -> Dfa:
    """
    DFA over (u, v). The relation method accepts val(v) = val(u0); the regex and string
    methods accept the digit strings with v = u0. With a one-term period all three agree.
    """
    match ShiftMethod(method):
        case ShiftMethod.RELATION:
            return relation_dfa(shift_relation(sys))
        case ShiftMethod.STRING:
            return _with_valid_tapes(sys, string_shift_dfa(sys))
        case ShiftMethod.REGEX:
            pattern = SHIFT_PATTERNS.get(str(sys))
            if pattern is None:
                raise QdfaoUnsupportedError(f"no shift pattern for {sys}")
            return _with_valid_tapes(sys, regex_to_dfa(pattern, relation_alphabet(sys, 2)))
