# tests/pipeline/test_floor_alpha.py
import pytest

from qdfao.automata.equivalence import equivalent
from qdfao.linrel.shift import string_shift_dfa
from qdfao.models.numeration_system import NumerationSystem
from qdfao.pipeline.floor_alpha import ProjectionOrder, ShiftPath, build_floor_alpha, chained_shift
from qdfao.pipeline.linkage import derive_beta
from qdfao.qexact.qexact import beatty_floor, parse_quadratic

CASES = ["(1+sqrt(5))/2", "sqrt(2)", "(-1+sqrt(3))/2", "1+sqrt(3)", "(3+sqrt(13))/2"]


class TestFloorAlpha:
    @pytest.mark.parametrize("alpha", CASES)
    def test_accepts_beatty_pairs(self, alpha):
        q = parse_quadratic(alpha)
        rel = build_floor_alpha(derive_beta(q))
        assert rel.tapes == ("n", "z")
        for n in range(25):
            z = beatty_floor(n, q)
            assert rel.accepts(n=n, z=z), n
            assert not rel.accepts(n=n, z=z + 1), n

    @pytest.mark.parametrize("alpha", ["(1+sqrt(5))/2", "sqrt(2)", "(-1+sqrt(3))/2"])
    def test_shift_paths_agree(self, alpha):
        link = derive_beta(parse_quadratic(alpha))
        weighted = build_floor_alpha(link, ShiftPath.WEIGHTED)
        chained = build_floor_alpha(link, ShiftPath.CHAINED)
        assert equivalent(weighted.dfa, chained.dfa)

    def test_projection_orders_agree(self):
        link = derive_beta(parse_quadratic("1+sqrt(3)"))
        eager = build_floor_alpha(link, order=ProjectionOrder.EAGER)
        deferred = build_floor_alpha(link, order=ProjectionOrder.DEFERRED)
        assert equivalent(eager.dfa, deferred.dfa)


@pytest.mark.slow
class TestFloorAlphaSizes:
    @pytest.mark.parametrize(
        "alpha, states",
        [
            ("(1+sqrt(5))/2", 7),
            ("(-1+sqrt(3))/2", 23),
            ("1+sqrt(3)", 20),
        ],
    )
    def test_minimal_states_and_range(self, alpha, states):
        q = parse_quadratic(alpha)
        rel = build_floor_alpha(derive_beta(q))
        assert rel.n_states == states
        for n in range(2001):
            z = beatty_floor(n, q)
            assert rel.accepts(n=n, z=z), n
            assert not rel.accepts(n=n, z=z + 1), n
            if z:
                assert not rel.accepts(n=n, z=z - 1), n


class TestChainedShift:
    def test_single_step_is_string_shift(self):
        fib = NumerationSystem.fibonacci()
        rel = chained_shift(fib, 1)
        assert rel.tapes == ("u", "v")
        assert equivalent(rel.dfa, string_shift_dfa(fib))

    def test_two_steps_append_two_zeros(self):
        ost = NumerationSystem.ostrowski((2, 1))
        rel = chained_shift(ost, 2)
        assert rel.accepts_digits(u=[0, 0, 1, 1], v=[1, 1, 0, 0])
        assert not rel.accepts_digits(u=[0, 0, 1, 1], v=[0, 1, 1, 0])
