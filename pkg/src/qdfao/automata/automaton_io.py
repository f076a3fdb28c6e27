# qdfao/automata/automaton_io.py
"""
Text and DOT forms of automata.

Text form, line by line:

    alphabet: 2x2
    states: 3 start: 0
    state 0 output 1
      0,0 -> 0
      0,1 -> 1

Missing transitions go to the implied sink, which has no output. An output written `-`
means "no output". States are listed in index order, transitions in symbol order, so
two equal automata always produce identical text.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa, Dfao, Output
from qdfao.models.qdfao_errors import QdfaoParseError

_STATES_LINE = re.compile(r"^states:\s*(?P<n>\d+)\s+start:\s*(?P<start>\d+)$")
_STATE_LINE = re.compile(r"^state\s+(?P<q>\d+)\s+output\s+(?P<out>\S+)$")
_EDGE_LINE = re.compile(r"^(?P<sym>[\d,\s]+?)\s*->\s*(?P<t>\d+)$")


def _format_output(o: Output) -> str:
    return "-" if o is None else str(o)


def _parse_output(text: str) -> Output:
    if text == "-":
        return None
    try:
        return int(text)
    except ValueError:
        return text


def write_automaton(a: Dfao) -> str:
    lines = [f"alphabet: {a.alphabet.describe()}", f"states: {a.n_states} start: {a.start}"]
    for q in range(a.n_states):
        lines.append(f"state {q} output {_format_output(a.outputs[q])}")
        for sym, t in sorted(a.delta[q].items()):
            lines.append(f"  {a.alphabet.format_symbol(sym)} -> {t}")
    return "\n".join(lines) + "\n"


def read_automaton(text: str, as_dfa: bool = False) -> Dfao:
    """Parses the text form; `as_dfa` reads 0/1 outputs as a Dfa whose sink rejects."""
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise QdfaoParseError("automaton text needs an alphabet and a states line")

    no, head = lines[0]
    if not head.startswith("alphabet:"):
        raise QdfaoParseError("expected 'alphabet: ...'", text=head, position=no)
    alphabet = Alphabet.parse(head.split(":", 1)[1])

    no, states_line = lines[1]
    m = _STATES_LINE.match(states_line)
    if not m:
        raise QdfaoParseError("expected 'states: N start: q'", text=states_line, position=no)
    n = int(m.group("n"))
    start = int(m.group("start"))

    delta: list[dict[int, int]] = [{} for _ in range(n)]
    outputs: list[Output] = [None] * n
    seen: set[int] = set()
    current: int | None = None
    for no, ln in lines[2:]:
        if ms := _STATE_LINE.match(ln):
            current = int(ms.group("q"))
            if current >= n or current in seen:
                raise QdfaoParseError(f"bad or repeated state {current}", text=ln, position=no)
            seen.add(current)
            outputs[current] = _parse_output(ms.group("out"))
            continue
        me = _EDGE_LINE.match(ln)
        if not me or current is None:
            raise QdfaoParseError("expected 'state q output o' or '<symbol> -> <target>'", text=ln, position=no)
        sym = alphabet.parse_symbol(me.group("sym"))
        if sym in delta[current]:
            raise QdfaoParseError(f"state {current} has two transitions on one symbol", text=ln, position=no)
        delta[current][sym] = int(me.group("t"))
    if len(seen) != n:
        raise QdfaoParseError(f"{n} states declared, {len(seen)} listed")
    if as_dfa:
        return Dfa(alphabet, delta, [o == 1 for o in outputs], start)
    return Dfao(alphabet, delta, outputs, start, None)


def to_dot(a: Dfao, labels: Sequence[str] | None = None, name: str = "automaton") -> str:
    """
    Graphviz text with nodes labeled `i/o` (or `labels[i]/o`); the start state gets a
    headless incoming arrow. Parallel edges are merged into one comma-separated label.
    """
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=circle];', '  init [shape=point, style=invis];']
    for q in range(a.n_states):
        tag = labels[q] if labels is not None else str(q)
        lines.append(f'  {q} [label="{tag}/{_format_output(a.outputs[q])}"];')
    lines.append(f"  init -> {a.start} [arrowhead=none];")
    for q in range(a.n_states):
        grouped: dict[int, list[str]] = {}
        for sym, t in sorted(a.delta[q].items()):
            grouped.setdefault(t, []).append(_dot_symbol(a.alphabet, sym))
        for t, syms in sorted(grouped.items()):
            lines.append(f'  {q} -> {t} [label="{", ".join(syms)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_symbol(alphabet: Alphabet, sym: int) -> str:
    col = alphabet.decode(sym)
    return str(col[0]) if len(col) == 1 else "[" + ",".join(str(v) for v in col) + "]"
