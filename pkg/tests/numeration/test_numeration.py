# tests/numeration/test_numeration.py
import pytest

from qdfao.automata.equivalence import equivalent
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoRepresentationError
from qdfao.models.representation import Representation
from qdfao.numeration import (
    base_state_labels,
    decode,
    digit_alphabet,
    encode,
    is_valid,
    max_digit,
    parse_representation,
    phase_count,
    validity_dfa,
)

SYSTEMS = [
    NumerationSystem.fibonacci(),
    NumerationSystem.pell(),
    NumerationSystem.ostrowski((3,)),
    NumerationSystem.ostrowski((2, 1)),
    NumerationSystem.ostrowski((3, 1, 1)),
]


class TestFunctions:
    @pytest.mark.parametrize("sys", SYSTEMS, ids=str)
    def test_encode_decode(self, sys):
        for n in range(200):
            r = encode(sys, n)
            assert isinstance(r, Representation)
            assert is_valid(sys, r)
            assert decode(sys, r) == n

    def test_parse_representation(self):
        fib = NumerationSystem.fibonacci()
        assert parse_representation(fib, "1010").digits == (1, 0, 1, 0)
        with pytest.raises(QdfaoRepresentationError):
            parse_representation(fib, "0110")

    def test_sizes(self):
        ost = NumerationSystem.ostrowski((3, 1, 1))
        assert max_digit(ost) == 3
        assert phase_count(ost) == 3
        assert digit_alphabet(ost).size == 4


class TestUniqueness:
    @pytest.mark.parametrize("sys", SYSTEMS, ids=str)
    def test_valid_strings_cover_range_once(self, sys, valid_strings):
        length = 6
        values = sorted(sys.decode(w) for w in valid_strings(sys, length))
        assert values == list(range(sys.basis(length)))


class TestValidityDfa:
    @pytest.mark.parametrize("sys", SYSTEMS, ids=str)
    def test_matches_is_valid(self, sys, words):
        dfa = validity_dfa(sys)
        for w in words(sys.max_digit + 1, 6):
            assert dfa.accepts(w) == sys.is_valid(w), w

    def test_fibonacci_is_two_states(self):
        dfa = validity_dfa(NumerationSystem.fibonacci())
        assert dfa.n_states == 2
        assert base_state_labels(dfa) == ["B0", "B1"]

    def test_leading_zeros_and_empty_word(self):
        dfa = validity_dfa(NumerationSystem.pell())
        assert dfa.accepts([])
        assert dfa.accepts([0, 0, 2, 0])
        assert not dfa.accepts([0, 0, 2])


def _accepted_words(dfa, length: int) -> list[list[int]]:
    """Words of exactly `length` symbols accepted by a partial Dfa, by depth-first walk."""
    out: list[list[int]] = []
    stack = [(dfa.start, [])]
    while stack:
        q, w = stack.pop()
        if len(w) == length:
            if dfa.outputs[q]:
                out.append(w)
            continue
        for sym, t in dfa.delta[q].items():
            stack.append((t, w + [sym]))
    return out


@pytest.mark.slow
class TestNumerationBounds:
    @pytest.mark.parametrize("sys", SYSTEMS, ids=str)
    def test_roundtrip_below_1e5(self, sys):
        for n in range(10**5):
            assert sys.decode(sys.encode(n)) == n, n

    def test_pell_agrees_with_period_two(self):
        pell = NumerationSystem.pell()
        ost = NumerationSystem.ostrowski((2,))
        assert [pell.basis(i) for i in range(30)] == [ost.basis(i) for i in range(30)]
        for n in range(10**5):
            assert pell.encode(n) == ost.encode(n), n

    def test_pell_validity_agrees_with_period_two(self, words):
        pell = NumerationSystem.pell()
        ost = NumerationSystem.ostrowski((2,))
        for w in words(3, 8):
            assert pell.is_valid(w) == ost.is_valid(w), w
        assert equivalent(validity_dfa(pell), validity_dfa(ost))

    @pytest.mark.parametrize(
        "sys",
        [
            NumerationSystem.fibonacci(),
            NumerationSystem.pell(),
            NumerationSystem.ostrowski((2, 1)),
            NumerationSystem.ostrowski((3, 1, 1)),
        ],
        ids=str,
    )
    def test_valid_strings_cover_range_once_to_length_12(self, sys):
        dfa = validity_dfa(sys)
        for length in range(1, 13):
            strings = _accepted_words(dfa, length)
            assert all(sys.is_valid(w) for w in strings)
            values = sorted(sys.decode(w) for w in strings)
            assert values == list(range(sys.basis(length))), length

    @pytest.mark.parametrize("sys", SYSTEMS, ids=str)
    def test_validity_dfa_to_length_10(self, sys, words):
        dfa = validity_dfa(sys)
        for w in words(sys.max_digit + 1, 10):
            assert dfa.accepts(w) == sys.is_valid(w), w
