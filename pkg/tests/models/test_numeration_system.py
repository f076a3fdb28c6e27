# tests/models/test_numeration_system.py
from itertools import product

import pytest

from qdfao.models.numeration_system import NumerationKind, NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError, QdfaoParseError, QdfaoRepresentationError

FIB = NumerationSystem.fibonacci()
PELL = NumerationSystem.pell()
OST_21 = NumerationSystem.ostrowski((2, 1))
OST_311 = NumerationSystem.ostrowski((3, 1, 1))


def _valid_strings(sys: NumerationSystem, length: int):
    for digits in product(range(sys.max_digit + 1), repeat=length):
        if sys.is_valid(digits):
            yield digits


class TestBuilders:
    def test_period_filled_for_named_kinds(self):
        assert FIB.period == (1,)
        assert PELL.period == (2,)

    @pytest.mark.parametrize(
        "text, expected",
        [("fib", FIB), ("zeckendorf", FIB), ("pell", PELL), ("ost:[2,1]", OST_21), ("ost[3, 1, 1]", OST_311)],
    )
    def test_parse(self, text, expected):
        assert NumerationSystem.parse(text) == expected

    def test_parse_rejects(self):
        with pytest.raises(QdfaoParseError):
            NumerationSystem.parse("base10")

    def test_empty_period_rejected(self):
        with pytest.raises(QdfaoInputError):
            NumerationSystem(kind=NumerationKind.OSTROWSKI, period=())

    @pytest.mark.parametrize("sys, text", [(FIB, "fib"), (PELL, "pell"), (OST_21, "ost:[2,1]")])
    def test_str(self, sys, text):
        assert str(sys) == text


class TestBasis:
    def test_fibonacci(self):
        assert [FIB.basis(i) for i in range(-1, 8)] == [1, 1, 2, 3, 5, 8, 13, 21, 34]

    def test_pell(self):
        assert [PELL.basis(i) for i in range(-1, 6)] == [0, 1, 2, 5, 12, 29, 70]

    def test_ostrowski_21(self):
        # convergent denominators of [0; 2, 1, 2, 1, ...]
        assert [OST_21.basis(i) for i in range(0, 7)] == [1, 2, 3, 8, 11, 30, 41]

    def test_ostrowski_311(self):
        assert [OST_311.basis(i) for i in range(0, 7)] == [1, 3, 4, 7, 25, 32, 57]

    def test_index_below_minus_one(self):
        with pytest.raises(QdfaoInputError):
            FIB.basis(-2)

    def test_rules_cycle_with_period(self):
        assert [OST_311.digit_bound(i) for i in range(6)] == [3, 1, 1, 3, 1, 1]
        assert [OST_311.recurrence_coefficient(r) for r in range(1, 7)] == [3, 1, 1, 3, 1, 1]
        assert OST_311.phase_count == 3
        assert OST_311.max_digit == 3


class TestRepresentations:
    @pytest.mark.parametrize(
        "sys, n, digits",
        [
            (FIB, 0, [0]),
            (FIB, 16, [1, 0, 0, 1, 0, 0]),
            (FIB, 4, [1, 0, 1]),
            (PELL, 27, [2, 0, 1, 1]),
            (OST_21, 5, [1, 1, 0]),
            (OST_21, 10, [1, 0, 1, 0]),
        ],
    )
    def test_encode(self, sys, n, digits):
        assert sys.encode(n) == digits
        assert sys.decode(digits) == n

    @pytest.mark.parametrize("sys", [FIB, PELL, OST_21, OST_311])
    def test_encode_is_valid_and_inverts(self, sys):
        for n in range(300):
            digits = sys.encode(n)
            assert sys.is_valid(digits)
            assert sys.decode(digits) == n

    @pytest.mark.parametrize("sys", [FIB, PELL, OST_21, OST_311])
    def test_valid_strings_are_unique(self, sys):
        # every value below U_6 has exactly one valid string of length 6
        values = [sys.decode(d) for d in _valid_strings(sys, 6)]
        assert sorted(values) == list(range(sys.basis(6)))

    @pytest.mark.parametrize(
        "sys, digits, valid",
        [
            (FIB, [1, 1, 0], False),
            (FIB, [1, 0, 1], True),
            (FIB, [0, 0, 1, 0, 1], True),
            (PELL, [2, 1], False),
            (PELL, [2], False),
            (PELL, [2, 0], True),
            (OST_21, [2, 0, 1, 1, 0], True),
            (OST_21, [1, 1, 1], False),
            (OST_21, [2], False),
            (FIB, [], True),
        ],
    )
    def test_is_valid(self, sys, digits, valid):
        assert sys.is_valid(digits) is valid

    def test_strict_decode(self):
        with pytest.raises(QdfaoRepresentationError):
            FIB.decode([1, 1])
        assert FIB.decode([1, 1], strict=False) == 3

    def test_negative_encode(self):
        with pytest.raises(QdfaoInputError):
            FIB.encode(-1)
