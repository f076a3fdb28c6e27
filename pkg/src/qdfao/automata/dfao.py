# qdfao/automata/dfao.py
"""
Deterministic automata with output.

Transitions are partial: a missing (state, symbol) entry goes to an implied sink that
loops on every symbol and outputs `sink_output`. For a Dfao the sink means "no output"
(None); for a Dfa it is a rejecting state (0).
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence

from qdfao.automata.alphabet import Alphabet
from qdfao.models.qdfao_errors import QdfaoAlphabetError, QdfaoError

Output = Hashable | None


class Dfao:
    __slots__ = ("alphabet", "start", "delta", "outputs", "sink_output")

    def __init__(
        self,
        alphabet: Alphabet,
        delta: Sequence[Mapping[int, int]],
        outputs: Sequence[Output],
        start: int = 0,
        sink_output: Output = None,
    ):
        if len(delta) != len(outputs):
            raise QdfaoError(f"{len(delta)} transition rows for {len(outputs)} outputs")
        if not outputs:
            raise QdfaoError("an automaton needs at least one state")
        n = len(outputs)
        if not 0 <= start < n:
            raise QdfaoError(f"start state {start} out of range")
        size = alphabet.size
        rows = []
        for q, row in enumerate(delta):
            for sym, target in row.items():
                if not 0 <= sym < size:
                    raise QdfaoAlphabetError(f"state {q}: symbol {sym} outside alphabet {alphabet.describe()}")
                if not 0 <= target < n:
                    raise QdfaoError(f"state {q}: target {target} out of range")
            rows.append(dict(row))
        self.alphabet = alphabet
        self.start = start
        self.delta: tuple[dict[int, int], ...] = tuple(rows)
        self.outputs: tuple[Output, ...] = tuple(outputs)
        self.sink_output = sink_output

    @property
    def n_states(self) -> int:
        return len(self.outputs)

    @property
    def is_dfa(self) -> bool:
        return self.sink_output == 0 and all(o in (0, 1) for o in self.outputs)

    def output_of(self, state: int | None) -> Output:
        return self.sink_output if state is None else self.outputs[state]

    def symbol(self, sym: int | Sequence[int]) -> int:
        if isinstance(sym, int) and self.alphabet.arity > 1:
            if not 0 <= sym < self.alphabet.size:
                raise QdfaoAlphabetError(f"symbol {sym} outside alphabet {self.alphabet.describe()}")
            return sym
        return self.alphabet.encode(sym)

    def step(self, state: int | None, sym: int) -> int | None:
        if state is None:
            return None
        return self.delta[state].get(sym)

    def walk(self, word: Iterable[int | Sequence[int]]) -> int | None:
        """Final state, or None once the implied sink is reached."""
        state: int | None = self.start
        for raw in word:
            sym = self.symbol(raw)
            if state is None:
                continue
            state = self.delta[state].get(sym)
        return state

    def run(self, word: Iterable[int | Sequence[int]]) -> Output:
        return self.output_of(self.walk(word))

    def accepts(self, word: Iterable[int | Sequence[int]]) -> bool:
        return self.run(word) == 1

    def with_outputs(self, outputs: Sequence[Output], sink_output: Output = None) -> Dfao:
        return Dfao(self.alphabet, self.delta, outputs, self.start, sink_output)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dfao):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.start == other.start
            and self.delta == other.delta
            and self.outputs == other.outputs
            and self.sink_output == other.sink_output
        )

    def __hash__(self):
        return hash((self.alphabet, self.start, self.outputs, self.sink_output))

    def __repr__(self) -> str:
        kind = "Dfa" if isinstance(self, Dfa) else "Dfao"
        return f"{kind}(states={self.n_states}, alphabet={self.alphabet.describe()})"


class Dfa(Dfao):
    """A Dfao with outputs in {0, 1}; the implied sink rejects."""

    __slots__ = ()

    def __init__(
        self,
        alphabet: Alphabet,
        delta: Sequence[Mapping[int, int]],
        accepting: Sequence[bool | int],
        start: int = 0,
    ):
        super().__init__(alphabet, delta, [1 if acc else 0 for acc in accepting], start, 0)

    @classmethod
    def from_dfao(cls, a: Dfao) -> Dfa:
        return cls(a.alphabet, a.delta, [o == 1 for o in a.outputs], a.start)

    @property
    def accepting(self) -> frozenset[int]:
        return frozenset(q for q, o in enumerate(self.outputs) if o == 1)


def universal_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, [dict.fromkeys(alphabet.symbols(), 0)], [True])


def empty_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, [{}], [False])
