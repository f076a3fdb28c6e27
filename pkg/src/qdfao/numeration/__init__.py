# qdfao/numeration/__init__.py
from qdfao.models.numeration_system import NumerationKind, NumerationSystem
from qdfao.models.representation import Representation
from qdfao.numeration.numeration import (
    basis,
    decode,
    digit_bound,
    encode,
    is_valid,
    max_digit,
    parse_representation,
    phase_count,
    recurrence_coefficient,
)
from qdfao.numeration.validity import base_state_labels, digit_alphabet, validity_dfa

__all__ = [
    "NumerationKind",
    "NumerationSystem",
    "Representation",
    "base_state_labels",
    "basis",
    "decode",
    "digit_alphabet",
    "digit_bound",
    "encode",
    "is_valid",
    "max_digit",
    "parse_representation",
    "phase_count",
    "recurrence_coefficient",
    "validity_dfa",
]
