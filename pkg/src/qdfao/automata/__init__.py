# qdfao/automata/__init__.py
from qdfao.automata.algebra import (
    BoolOp,
    combine,
    complement,
    complete,
    determinize,
    erase_tape,
    intersect,
    join_tapes,
    minimize,
    product,
    project,
    reachable_states,
    reorder_tapes,
    restrict,
    union,
)
from qdfao.automata.alphabet import Alphabet
from qdfao.automata.automaton_io import read_automaton, to_dot, write_automaton
from qdfao.automata.dfao import Dfa, Dfao, empty_dfa, universal_dfa
from qdfao.automata.equivalence import equivalent, find_counterexample
from qdfao.automata.nfa import Nfa
from qdfao.automata.regex import regex_to_dfa

__all__ = [
    "Alphabet",
    "BoolOp",
    "Dfa",
    "Dfao",
    "Nfa",
    "combine",
    "complement",
    "complete",
    "determinize",
    "empty_dfa",
    "equivalent",
    "erase_tape",
    "find_counterexample",
    "intersect",
    "join_tapes",
    "minimize",
    "product",
    "project",
    "reachable_states",
    "read_automaton",
    "regex_to_dfa",
    "reorder_tapes",
    "restrict",
    "to_dot",
    "union",
    "universal_dfa",
    "write_automaton",
]
