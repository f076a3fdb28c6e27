# qdfao/automata/regex.py
"""
Regular expressions over tuple alphabets: `[0,1]` literals (or bare digits on one tape),
juxtaposition, `|`, `*` and parentheses. Whitespace is ignored. The empty pattern
denotes the empty word.
"""

from __future__ import annotations

from qdfao.automata.algebra import determinize, minimize
from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa
from qdfao.automata.nfa import Nfa
from qdfao.models.qdfao_errors import QdfaoParseError


class _Thompson:
    """Epsilon-NFA under construction; fragments are (entry, exit) state pairs."""

    def __init__(self):
        self.eps: list[set[int]] = []
        self.edges: list[dict[int, set[int]]] = []

    def state(self) -> int:
        self.eps.append(set())
        self.edges.append({})
        return len(self.eps) - 1

    def empty(self) -> tuple[int, int]:
        i, o = self.state(), self.state()
        self.eps[i].add(o)
        return i, o

    def concat(self, f: tuple[int, int], g: tuple[int, int]) -> tuple[int, int]:
        self.eps[f[1]].add(g[0])
        return f[0], g[1]

    def alt(self, f: tuple[int, int], g: tuple[int, int]) -> tuple[int, int]:
        i, o = self.state(), self.state()
        self.eps[i] |= {f[0], g[0]}
        self.eps[f[1]].add(o)
        self.eps[g[1]].add(o)
        return i, o

    def star(self, f: tuple[int, int]) -> tuple[int, int]:
        i, o = self.state(), self.state()
        self.eps[i] |= {f[0], o}
        self.eps[f[1]] |= {f[0], o}
        return i, o

    def closure(self, q: int) -> set[int]:
        seen = {q}
        stack = [q]
        while stack:
            for t in self.eps[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def to_nfa(self, alphabet: Alphabet, frag: tuple[int, int]) -> Nfa:
        closures = [self.closure(q) for q in range(len(self.eps))]
        delta: list[dict[int, set[int]]] = []
        for q in range(len(self.eps)):
            row: dict[int, set[int]] = {}
            for c in closures[q]:
                for sym, ts in self.edges[c].items():
                    row.setdefault(sym, set()).update(ts)
            delta.append(row)
        accepting = [q for q in range(len(self.eps)) if frag[1] in closures[q]]
        return Nfa(alphabet, delta, [frag[0]], accepting)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.columns: list[tuple[int, ...]] = []
        self.nfa = _Thompson()
        # literals are collected first so that an inferred alphabet is known before encoding
        self.pending: list[tuple[int, int, tuple[int, ...]]] = []

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def fail(self, message: str):
        raise QdfaoParseError(message, text=self.text, position=self.pos)

    def parse(self) -> tuple[int, int]:
        frag = self.union()
        if self.peek() is not None:
            self.fail(f"unexpected '{self.peek()}'")
        return frag

    def union(self) -> tuple[int, int]:
        frag = self.concat()
        while self.peek() == "|":
            self.pos += 1
            frag = self.nfa.alt(frag, self.concat())
        return frag

    def concat(self) -> tuple[int, int]:
        frag = None
        while (ch := self.peek()) is not None and ch not in "|)":
            nxt = self.starred()
            frag = nxt if frag is None else self.nfa.concat(frag, nxt)
        return frag if frag is not None else self.nfa.empty()

    def starred(self) -> tuple[int, int]:
        frag = self.atom()
        while self.peek() == "*":
            self.pos += 1
            frag = self.nfa.star(frag)
        return frag

    def atom(self) -> tuple[int, int]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            frag = self.union()
            if self.peek() != ")":
                self.fail("missing ')'")
            self.pos += 1
            return frag
        if ch == "[":
            end = self.text.find("]", self.pos)
            if end < 0:
                self.fail("unterminated tuple literal")
            body = self.text[self.pos + 1 : end]
            try:
                column = tuple(int(v) for v in body.split(","))
            except ValueError:
                self.fail(f"bad tuple literal [{body}]")
            self.pos = end + 1
            return self.literal(column)
        if ch is not None and ch.isdigit():
            self.pos += 1
            return self.literal((int(ch),))
        self.fail(f"unexpected '{ch}'" if ch is not None else "unexpected end of pattern")
        raise AssertionError  # pragma: no cover

    def literal(self, column: tuple[int, ...]) -> tuple[int, int]:
        if self.columns and len(column) != len(self.columns[0]):
            self.fail(f"tuple {list(column)} has the wrong arity")
        self.columns.append(column)
        i, o = self.nfa.state(), self.nfa.state()
        self.pending.append((i, o, column))
        return i, o


def regex_to_dfa(pattern: str, alphabet: Alphabet | None = None) -> Dfa:
    """
    Minimal DFA of the pattern. Without an explicit alphabet, the digit range of each
    tape is one more than the largest digit the pattern uses on it.
    """
    parser = _Parser(pattern)
    frag = parser.parse()
    if alphabet is None:
        if parser.columns:
            arity = len(parser.columns[0])
            alphabet = Alphabet(tuple(max(c[t] for c in parser.columns) + 1 for t in range(arity)))
        else:
            alphabet = Alphabet((1,))
    for i, o, column in parser.pending:
        parser.nfa.edges[i].setdefault(alphabet.encode(column), set()).add(o)
    return minimize(determinize(parser.nfa.to_nfa(alphabet, frag)))
