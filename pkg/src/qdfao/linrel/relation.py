# qdfao/linrel/relation.py
"""
Relation: a synchronized DFA whose tapes carry names, so that relations can be conjoined
on shared variables and variables can be quantified away by name.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from qdfao.automata.algebra import BoolOp, join_tapes, product, project, reorder_tapes
from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa
from qdfao.linrel.relation_builder import relation_alphabet, relation_dfa
from qdfao.models.linear_relation import LinearRelation
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoAlphabetError, QdfaoInputError
from qdfao.utils.log import log_d


class Relation:
    __slots__ = ("dfa", "tapes", "system")

    def __init__(self, dfa: Dfa, tapes: Sequence[str], system: NumerationSystem):
        if dfa.alphabet.arity != len(tapes):
            raise QdfaoAlphabetError(f"{len(tapes)} tape names for a {dfa.alphabet.arity}-tape automaton")
        if len(set(tapes)) != len(tapes):
            raise QdfaoInputError(f"tape names must be unique, got {list(tapes)}")
        self.dfa = dfa
        self.tapes: tuple[str, ...] = tuple(tapes)
        self.system = system

    @classmethod
    def linear(cls, rel: LinearRelation) -> Relation:
        return cls(relation_dfa(rel), rel.tapes, rel.system)

    @classmethod
    def zero(cls, system: NumerationSystem, tapes: Sequence[str]) -> Relation:
        """Accepts only the all-zero tuple."""
        alphabet = relation_alphabet(system, len(tapes))
        return cls(Dfa(alphabet, [{0: 0}], [True]), tapes, system)

    @property
    def n_states(self) -> int:
        return self.dfa.n_states

    def _check_system(self, other: Relation) -> None:
        if self.system != other.system:
            raise QdfaoAlphabetError(f"relations over {self.system} and {other.system} cannot be combined")

    # ----------------------------------------------------------------------------------------------
    # Composition
    # ----------------------------------------------------------------------------------------------
    def join(self, other: Relation) -> Relation:
        """Conjunction; tapes with the same name are read as one variable."""
        self._check_system(other)
        names = list(self.tapes) + [t for t in other.tapes if t not in self.tapes]
        alphabet = relation_alphabet(self.system, len(names))
        dfa = join_tapes(
            self.dfa,
            [names.index(t) for t in self.tapes],
            other.dfa,
            [names.index(t) for t in other.tapes],
            alphabet,
        )
        return Relation(dfa, names, self.system)

    def exists(self, *names: str) -> Relation:
        here = "relation.exists"
        rel = self
        for name in names:
            if name not in rel.tapes:
                raise QdfaoInputError(f"no tape named {name} in {list(rel.tapes)}")
            i = rel.tapes.index(name)
            rel = Relation(project(rel.dfa, i), rel.tapes[:i] + rel.tapes[i + 1 :], rel.system)
        log_d(here, f"exists {','.join(names)}", rel.n_states)
        return rel

    def rename(self, mapping: Mapping[str, str]) -> Relation:
        return Relation(self.dfa, [mapping.get(t, t) for t in self.tapes], self.system)

    def reorder(self, names: Sequence[str]) -> Relation:
        if sorted(names) != sorted(self.tapes):
            raise QdfaoInputError(f"{list(names)} is not a reordering of {list(self.tapes)}")
        if tuple(names) == self.tapes:
            return self
        return Relation(reorder_tapes(self.dfa, [self.tapes.index(t) for t in names]), names, self.system)

    def union(self, other: Relation) -> Relation:
        self._check_system(other)
        return Relation(product(self.dfa, other.reorder(self.tapes).dfa, BoolOp.OR), self.tapes, self.system)

    def intersection(self, other: Relation) -> Relation:
        self._check_system(other)
        return Relation(product(self.dfa, other.reorder(self.tapes).dfa, BoolOp.AND), self.tapes, self.system)

    # ----------------------------------------------------------------------------------------------
    # Membership
    # ----------------------------------------------------------------------------------------------
    @property
    def alphabet(self) -> Alphabet:
        return self.dfa.alphabet

    def accepts_digits(self, **digits: Sequence[int]) -> bool:
        self._check_names(digits)
        return self.dfa.accepts(self.alphabet.word(*(digits[t] for t in self.tapes)))

    def accepts(self, **values: int) -> bool:
        """Membership of integer values, each written in its greedy representation."""
        self._check_names(values)
        return self.accepts_digits(**{t: self.system.encode(v) for t, v in values.items()})

    def _check_names(self, given: Mapping[str, object]) -> None:
        if set(given) != set(self.tapes):
            raise QdfaoInputError(f"expected values for {list(self.tapes)}, got {sorted(given)}")

    def __repr__(self) -> str:
        return f"Relation({','.join(self.tapes)}; {self.system}; states={self.n_states})"
