# qdfao/automata/nfa.py
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

from qdfao.automata.alphabet import Alphabet
from qdfao.models.qdfao_errors import QdfaoError


class Nfa:
    """Nondeterministic automaton without epsilon moves (epsilon closure is resolved by the builders)."""

    __slots__ = ("alphabet", "starts", "delta", "accepting")

    def __init__(
        self,
        alphabet: Alphabet,
        delta: Sequence[Mapping[int, Iterable[int]]],
        starts: Iterable[int],
        accepting: Iterable[int],
    ):
        n = len(delta)
        rows = []
        for q, row in enumerate(delta):
            clean: dict[int, frozenset[int]] = {}
            for sym, targets in row.items():
                ts = frozenset(targets)
                if any(not 0 <= t < n for t in ts):
                    raise QdfaoError(f"state {q}: target out of range in {sorted(ts)}")
                if ts:
                    clean[sym] = ts
            rows.append(clean)
        self.alphabet = alphabet
        self.delta: tuple[dict[int, frozenset[int]], ...] = tuple(rows)
        self.starts = frozenset(starts)
        self.accepting = frozenset(accepting)
        if any(not 0 <= s < n for s in self.starts | self.accepting):
            raise QdfaoError("start or accepting state out of range")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def accepts(self, word: Iterable[int]) -> bool:
        current = set(self.starts)
        for sym in word:
            nxt: set[int] = set()
            for q in current:
                nxt |= self.delta[q].get(sym, frozenset())
            current = nxt
            if not current:
                return False
        return bool(current & self.accepting)
