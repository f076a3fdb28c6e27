# qdfao/automata/equivalence.py
from __future__ import annotations

from collections import deque

from qdfao.automata.algebra import check_same_alphabet
from qdfao.automata.dfao import Dfa, Dfao


def find_counterexample(
    a: Dfao,
    b: Dfao,
    domain: Dfa | None = None,
    ignore_undefined: bool = False,
) -> list[int] | None:
    """
    Shortest word on which a and b give different outputs, or None when they agree.

    `domain` limits the comparison to words it accepts. With `ignore_undefined`, words on
    which either side has no output (None) are not counted as disagreements.
    """
    check_same_alphabet(a, b)
    if domain is not None:
        check_same_alphabet(a, domain)
    all_syms = list(a.alphabet.symbols())
    start = (a.start, b.start, domain.start if domain is not None else None)
    parent: dict[tuple, tuple[tuple, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        p, q, d = state
        if domain is None or domain.outputs[d] == 1:
            oa, ob = a.output_of(p), b.output_of(q)
            if not (ignore_undefined and (oa is None or ob is None)) and oa != ob:
                return _word(parent, state)
        if p is None and q is None:
            continue
        syms = sorted(domain.delta[d]) if domain is not None else all_syms
        for s in syms:
            nxt = (a.step(p, s), b.step(q, s), domain.delta[d][s] if domain is not None else None)
            if nxt not in parent:
                parent[nxt] = (state, s)
                queue.append(nxt)
    return None


def _word(parent: dict[tuple, tuple[tuple, int] | None], state: tuple) -> list[int]:
    word: list[int] = []
    link = parent[state]
    while link is not None:
        state, sym = link
        word.append(sym)
        link = parent[state]
    word.reverse()
    return word


def equivalent(a: Dfao, b: Dfao, domain: Dfa | None = None, ignore_undefined: bool = False) -> bool:
    return find_counterexample(a, b, domain=domain, ignore_undefined=ignore_undefined) is None
