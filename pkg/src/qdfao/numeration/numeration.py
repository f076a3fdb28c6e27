# qdfao/numeration/numeration.py
"""Function forms of the NumerationSystem operations, working on Representation values."""

from __future__ import annotations

from collections.abc import Sequence

from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoRepresentationError
from qdfao.models.representation import Representation


def basis(sys: NumerationSystem, i: int) -> int:
    return sys.basis(i)


def encode(sys: NumerationSystem, n: int) -> Representation:
    return Representation(digits=tuple(sys.encode(n)))


def decode(sys: NumerationSystem, r: Representation | Sequence[int], strict: bool = True) -> int:
    digits = r.digits if isinstance(r, Representation) else tuple(r)
    return sys.decode(digits, strict=strict)


def is_valid(sys: NumerationSystem, digits: Representation | Sequence[int]) -> bool:
    return sys.is_valid(digits.digits if isinstance(digits, Representation) else digits)


def parse_representation(sys: NumerationSystem, text: str) -> Representation:
    """Reads a digit string and checks it against the system's rules."""
    r = Representation.parse(text)
    if not sys.is_valid(r.digits):
        raise QdfaoRepresentationError(f"{text} is not a valid {sys} representation")
    return r


def digit_bound(sys: NumerationSystem, i: int) -> int:
    return sys.digit_bound(i)


def recurrence_coefficient(sys: NumerationSystem, r: int) -> int:
    return sys.recurrence_coefficient(r)


def max_digit(sys: NumerationSystem) -> int:
    return sys.max_digit


def phase_count(sys: NumerationSystem) -> int:
    return sys.phase_count
