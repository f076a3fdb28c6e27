# tests/automata/test_algebra.py
import pytest

from qdfao.automata.algebra import (
    BoolOp,
    combine,
    complement,
    complete,
    determinize,
    erase_tape,
    join_tapes,
    minimize,
    product,
    project,
    reorder_tapes,
    restrict,
)
from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa, Dfao, universal_dfa
from qdfao.automata.equivalence import equivalent
from qdfao.automata.nfa import Nfa
from qdfao.automata.regex import regex_to_dfa
from qdfao.models.qdfao_errors import QdfaoAlphabetError, QdfaoOverlapError

BINARY = Alphabet((2,))


class TestMinimize:
    def test_merges_equivalent_states(self):
        a = Dfa(BINARY, [{0: 0, 1: 1}, {0: 2, 1: 1}, {0: 2, 1: 1}], [False, True, False])
        assert minimize(a) == Dfa(BINARY, [{0: 0, 1: 1}, {0: 0, 1: 1}], [False, True])

    def test_drops_dead_states(self):
        a = Dfa(BINARY, [{0: 1, 1: 2}, {1: 1}, {0: 2, 1: 2}], [False, True, False])
        m = minimize(a)
        assert m == Dfa(BINARY, [{0: 1}, {1: 1}], [False, True])

    def test_numbering_is_canonical(self):
        a = Dfa(BINARY, [{0: 1, 1: 2}, {0: 1}, {1: 2}], [False, True, True])
        # same automaton with states 1 and 2 swapped
        b = Dfa(BINARY, [{0: 2, 1: 1}, {1: 1}, {0: 2}], [False, True, True])
        assert minimize(a) == minimize(b)

    def test_keeps_outputs_apart(self):
        a = Dfao(BINARY, [{0: 1, 1: 2}, {}, {}], [0, 5, 5])
        m = minimize(a)
        assert m.n_states == 2
        assert m.run([1]) == 5
        assert m.run([1, 1]) is None

    def test_empty_language(self):
        m = minimize(Dfa(BINARY, [{0: 1}, {0: 0}], [False, False]))
        assert m.n_states == 1
        assert not m.accepting


class TestBoolean:
    @pytest.mark.parametrize("op", list(BoolOp))
    def test_product_matches_pointwise(self, op, even_ones, ends_with_one, words):
        p = product(even_ones, ends_with_one, op)
        for w in words(2, 6):
            assert p.accepts(w) == op.apply(even_ones.accepts(w), ends_with_one.accepts(w))

    def test_complement(self, ends_with_one, words):
        c = complement(ends_with_one)
        for w in words(2, 5):
            assert c.accepts(w) != ends_with_one.accepts(w)

    def test_complement_of_partial(self):
        c = complement(Dfa(BINARY, [{1: 0}], [True]))
        assert c.accepts([0])
        assert not c.accepts([1, 1])

    def test_complete_adds_sink(self):
        a = complete(Dfao(BINARY, [{0: 0}], ["x"]))
        assert a.n_states == 2
        assert all(len(row) == 2 for row in a.delta)
        assert a.run([1]) is None

    def test_alphabet_mismatch(self, even_ones):
        with pytest.raises(QdfaoAlphabetError):
            product(even_ones, universal_dfa(Alphabet((3,))))

    def test_restrict(self, even_ones):
        outputs = Dfao(BINARY, [{0: 0, 1: 0}], [7])
        r = restrict(outputs, even_ones)
        assert r.run([1, 1]) == 7
        assert r.run([1]) is None


class TestCombine:
    def test_labels_and_default(self):
        ends_1 = regex_to_dfa("(0|1)*1")
        ends_10 = regex_to_dfa("(0|1)*10")
        c = combine([(ends_1, 5), (ends_10, 7)], default=0)
        assert c.run([0, 1]) == 5
        assert c.run([1, 1, 0]) == 7
        assert c.run([0, 0]) == 0
        assert c.run([]) == 0

    def test_overlap_reports_shortest_witness(self):
        with pytest.raises(QdfaoOverlapError) as err:
            combine([(regex_to_dfa("(0|1)*1"), 1), (regex_to_dfa("1*"), 2)])
        assert err.value.witness == [1]

    def test_overlap_outside_domain_is_allowed(self):
        domain = regex_to_dfa("0(0|1)*")
        c = combine([(regex_to_dfa("(0|1)*1"), 1), (regex_to_dfa("1*"), 2)], domain=domain)
        assert c.run([0, 1]) == 1
        assert c.run([1]) is None

    def test_needs_parts(self):
        with pytest.raises(QdfaoAlphabetError):
            combine([])


class TestTapes:
    def test_determinize(self, words):
        nfa = Nfa(BINARY, [{0: {0}, 1: {0, 1}}, {}], [0], [1])
        d = determinize(nfa)
        for w in words(2, 5):
            assert d.accepts(w) == nfa.accepts(w)

    def test_project_equality_relation(self):
        eq = regex_to_dfa("([0,0]|[1,1])*")
        assert equivalent(project(eq, 1), universal_dfa(BINARY))

    def test_erase_tape_allows_longer_erased_value(self):
        rel = regex_to_dfa("[0,1][1,0]")
        nfa = erase_tape(rel, 1)
        assert nfa.accepts([0, 1])
        assert nfa.accepts([1])
        assert not nfa.accepts([1, 1])

    def test_project_only_tape(self, even_ones):
        with pytest.raises(QdfaoAlphabetError):
            project(even_ones, 0)

    def test_reorder(self):
        rel = regex_to_dfa("[0,1]", Alphabet.tapes(2, 2))
        swapped = reorder_tapes(rel, [1, 0])
        assert swapped.accepts([(1, 0)])
        assert not swapped.accepts([(0, 1)])
        with pytest.raises(QdfaoAlphabetError):
            reorder_tapes(rel, [0, 0])

    def test_join_then_project(self):
        eq = regex_to_dfa("([0,0]|[1,1])*")
        joined = join_tapes(eq, (0, 1), eq, (1, 2), Alphabet.tapes(3, 2))
        assert joined.accepts([(1, 1, 1), (0, 0, 0)])
        assert not joined.accepts([(1, 1, 0)])
        assert equivalent(project(joined, 1), eq)

    def test_join_must_cover(self):
        eq = regex_to_dfa("([0,0]|[1,1])*")
        with pytest.raises(QdfaoAlphabetError):
            join_tapes(eq, (0, 1), eq, (0, 1), Alphabet.tapes(3, 2))
