# tests/pipeline/test_digit_bundle.py
from functools import lru_cache
from pathlib import Path

import pytest

from qdfao.automata.automaton_io import read_automaton
from qdfao.automata.equivalence import equivalent
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.numeration.validity import validity_dfa
from qdfao.pipeline.digit_bundle import build_digit_dfao, eval_digit
from qdfao.pipeline.linkage import derive_beta
from qdfao.pipeline.presets import get_preset
from qdfao.qexact.qexact import beatty_floor, expansion, parse_quadratic

FIXTURE = Path(__file__).parent.parent / "fixtures" / "phi_base10.dfao"


@pytest.fixture(scope="module")
def phi_b2():
    return build_digit_dfao(derive_beta(parse_quadratic("(1+sqrt(5))/2")), 2)


class TestDigitDfao:
    def test_phi_base2_states(self, phi_b2):
        assert phi_b2.n_states == 8
        assert set(phi_b2.digit_dfas) == {1}

    def test_phi_base2_digits(self, phi_b2):
        _int_part, digits = expansion(phi_b2.link.alpha, 2, 200)
        assert [eval_digit(phi_b2, n) for n in range(200)] == digits

    def test_invalid_input_has_no_output(self, phi_b2):
        assert phi_b2.dfao.run([1, 1]) is None

    def test_base_checked(self):
        with pytest.raises(QdfaoInputError):
            build_digit_dfao(derive_beta(parse_quadratic("sqrt(2)")), 1)

    def test_negative_index(self, phi_b2):
        with pytest.raises(QdfaoInputError):
            eval_digit(phi_b2, -1)


@lru_cache(maxsize=None)
def _bundle(alpha: str, b: int):
    return build_digit_dfao(derive_beta(parse_quadratic(alpha)), b)


def _oracle_digits(bundle, count: int) -> list[int]:
    _int_part, digits = expansion(bundle.link.alpha, bundle.base, count)
    return digits


@pytest.mark.slow
class TestKnownCases:
    @pytest.mark.parametrize(
        "alpha, b, states",
        [
            ("sqrt(2)", 2, 6),
            ("sqrt(2)", 3, 14),
            ("(3+sqrt(13))/2", 2, 7),
            ("(3+sqrt(13))/2", 3, 8),
            ("(-1+sqrt(3))/2", 2, 12),
            ("(-3+sqrt(17))/4", 2, 16),
            ("(1+sqrt(5))/2", 3, 13),
        ],
    )
    def test_state_counts_and_digits(self, alpha, b, states):
        bundle = _bundle(alpha, b)
        assert bundle.n_states == states
        assert [eval_digit(bundle, n) for n in range(2001)] == _oracle_digits(bundle, 2001)

    @pytest.mark.parametrize("name", ["sqrt3p1-b2", "sqrt17p3half-b2"])
    def test_presets_without_published_counts(self, name):
        preset = get_preset(name)
        bundle = _bundle(preset.alpha, preset.base)
        assert str(bundle.system) == preset.system
        assert [eval_digit(bundle, n) for n in range(2001)] == _oracle_digits(bundle, 2001)

    @pytest.mark.parametrize(
        "alpha, b",
        [("(1+sqrt(5))/2", 3), ("(3+sqrt(13))/2", 3), ("sqrt(2)", 3)],
    )
    def test_digit_automata_partition_valid_words(self, alpha, b, valid_strings):
        bundle = _bundle(alpha, b)
        q_alpha = bundle.link.alpha
        assert set(bundle.digit_dfas) == set(range(1, b))
        for length in range(1, 8):
            for w in valid_strings(bundle.system, length):
                q = bundle.system.decode(w)
                expected = beatty_floor(b * q, q_alpha) - b * beatty_floor(q, q_alpha)
                hits = [i for i, dfa in bundle.digit_dfas.items() if dfa.accepts(w)]
                assert hits == ([expected] if expected else []), w
                assert bundle.dfao.run(w) == expected, w

    def test_phi_base10_matches_fixture(self):
        bundle = build_digit_dfao(derive_beta(parse_quadratic("(1+sqrt(5))/2")), 10)
        fixture = read_automaton(FIXTURE.read_text())
        assert bundle.n_states == 97
        assert equivalent(
            bundle.dfao, fixture, domain=validity_dfa(NumerationSystem.fibonacci()), ignore_undefined=True
        )
        assert [eval_digit(bundle, n) for n in range(2001)] == _oracle_digits(bundle, 2001)
