# qdfao/linrel/__init__.py
from qdfao.linrel.floor_div import floor_div_relation
from qdfao.linrel.parser import parse_relation
from qdfao.linrel.relation import Relation
from qdfao.linrel.relation_builder import relation_alphabet, relation_dfa, set_state_cap, shift_weights
from qdfao.linrel.shift import ShiftMethod, shift_dfa, shift_relation, string_shift_dfa
from qdfao.linrel.shift_patterns import SHIFT_PATTERNS
from qdfao.models.linear_relation import LinearRelation, RelationTerm

__all__ = [
    "SHIFT_PATTERNS",
    "LinearRelation",
    "Relation",
    "RelationTerm",
    "ShiftMethod",
    "floor_div_relation",
    "parse_relation",
    "relation_alphabet",
    "relation_dfa",
    "set_state_cap",
    "shift_dfa",
    "shift_relation",
    "shift_weights",
    "string_shift_dfa",
]
