# tests/linrel/test_shift.py
import pytest

from qdfao.automata.equivalence import equivalent
from qdfao.linrel.relation_builder import relation_alphabet
from qdfao.linrel.shift import ShiftMethod, shift_dfa, string_shift_dfa
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoUnsupportedError

FIB = NumerationSystem.fibonacci()
PELL = NumerationSystem.pell()
BRONZE = NumerationSystem.ostrowski((3,))
OST_21 = NumerationSystem.ostrowski((2, 1))
OST_311 = NumerationSystem.ostrowski((3, 1, 1))


class TestShift:
    @pytest.mark.parametrize("sys", [FIB, PELL, BRONZE], ids=str)
    def test_methods_agree_on_one_term_periods(self, sys):
        by_relation = shift_dfa(sys, ShiftMethod.RELATION)
        assert equivalent(by_relation, shift_dfa(sys, ShiftMethod.STRING))
        assert equivalent(by_relation, shift_dfa(sys, ShiftMethod.REGEX))

    @pytest.mark.parametrize("sys", [FIB, PELL, BRONZE, OST_21, OST_311], ids=str)
    def test_pattern_accepts_shifted_pairs(self, sys, valid_strings):
        dfa = shift_dfa(sys, "regex")
        alphabet = relation_alphabet(sys, 2)
        for u in valid_strings(sys, 5):
            if sys.is_valid(u + [0]):
                assert dfa.accepts(alphabet.word([0] + u, u + [0])), u

    @pytest.mark.parametrize("sys", [FIB, OST_21], ids=str)
    def test_relation_method_holds(self, sys, valid_strings):
        dfa = shift_dfa(sys)
        alphabet = relation_alphabet(sys, 2)
        for u in valid_strings(sys, 4):
            v = sys.encode(sys.decode(u + [0], strict=False))
            assert dfa.accepts(alphabet.word(u, v)), u

    def test_string_shift_ignores_validity(self):
        dfa = string_shift_dfa(FIB)
        alphabet = relation_alphabet(FIB, 2)
        assert dfa.accepts(alphabet.word([0, 1, 1], [1, 1, 0]))
        assert not dfa.accepts(alphabet.word([0, 1, 1], [1, 0, 0]))

    def test_no_pattern(self):
        with pytest.raises(QdfaoUnsupportedError):
            shift_dfa(NumerationSystem.ostrowski((4, 2)), ShiftMethod.REGEX)
