# qdfao/automata/algebra.py
"""
Boolean and structural operations on automata.

Every operation returns a fresh automaton; inputs are never mutated. Results that are
documented as minimal go through `minimize`, which numbers states canonically
(breadth-first from the start state, edges in symbol order).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Sequence
from enum import StrEnum

from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa, Dfao, Output
from qdfao.automata.nfa import Nfa
from qdfao.models.qdfao_errors import QdfaoAlphabetError, QdfaoOverlapError
from qdfao.utils.log import log_d


class BoolOp(StrEnum):
    AND = "and"
    OR = "or"
    XOR = "xor"
    DIFF = "diff"
    IFF = "iff"

    def apply(self, x: bool, y: bool) -> bool:
        match self:
            case BoolOp.AND:
                return x and y
            case BoolOp.OR:
                return x or y
            case BoolOp.XOR:
                return x != y
            case BoolOp.DIFF:
                return x and not y
            case BoolOp.IFF:
                return x == y


def check_same_alphabet(a: Dfao | Nfa, b: Dfao | Nfa) -> None:
    if a.alphabet != b.alphabet:
        raise QdfaoAlphabetError(f"alphabet mismatch: {a.alphabet.describe()} vs {b.alphabet.describe()}")


def reachable_states(a: Dfao) -> list[int]:
    """States reachable from the start, in canonical breadth-first order."""
    seen = {a.start}
    order = [a.start]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for _sym, t in sorted(a.delta[q].items()):
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def complete(a: Dfao) -> Dfao:
    """Materializes the implied sink as an explicit state; the result has every transition defined."""
    size = a.alphabet.size
    if all(len(row) == size for row in a.delta):
        return a
    sink = a.n_states
    delta = [{s: row.get(s, sink) for s in range(size)} for row in a.delta]
    delta.append(dict.fromkeys(range(size), sink))
    outputs = list(a.outputs) + [a.sink_output]
    if isinstance(a, Dfa):
        return Dfa(a.alphabet, delta, [o == 1 for o in outputs], a.start)
    return Dfao(a.alphabet, delta, outputs, a.start, a.sink_output)


def complement(a: Dfa) -> Dfa:
    full = complete(a)
    return minimize(Dfa(full.alphabet, full.delta, [o != 1 for o in full.outputs], full.start))


# --------------------------------------------------------------------------------------------------
# Minimization
# --------------------------------------------------------------------------------------------------
def minimize(a: Dfao) -> Dfao:
    """
    Moore partition refinement on the automaton completed with its implied sink; the
    sink class is dropped again at the end, so every result keeps the partial-delta form.
    """
    here = "algebra.minimize"
    reach = reachable_states(a)
    index = {q: i for i, q in enumerate(reach)}
    n = len(reach)
    sink = n
    trans: list[dict[int, int]] = [{s: index[t] for s, t in a.delta[q].items()} for q in reach]
    trans.append({})
    outputs: list[Output] = [a.outputs[q] for q in reach] + [a.sink_output]

    labels: dict[Hashable, int] = {}
    cls = [labels.setdefault(o, len(labels)) for o in outputs]
    n_classes = len(labels)
    while True:
        sink_cls = cls[sink]
        sigs: dict[tuple, int] = {}
        new = [
            sigs.setdefault(
                (cls[q], tuple(sorted((s, cls[t]) for s, t in trans[q].items() if cls[t] != sink_cls))),
                len(sigs),
            )
            for q in range(n + 1)
        ]
        cls = new
        if len(sigs) == n_classes:
            break
        n_classes = len(sigs)

    sink_cls = cls[sink]
    start_cls = cls[index[a.start]]
    is_dfa = isinstance(a, Dfa)
    if start_cls == sink_cls:
        if is_dfa:
            return Dfa(a.alphabet, [{}], [a.sink_output == 1])
        return Dfao(a.alphabet, [{}], [a.sink_output], 0, a.sink_output)

    rep: dict[int, int] = {}
    for q in range(n):
        rep.setdefault(cls[q], q)
    number = {start_cls: 0}
    order = [start_cls]
    queue = deque(order)
    while queue:
        c = queue.popleft()
        for _s, t in sorted(trans[rep[c]].items()):
            tc = cls[t]
            if tc != sink_cls and tc not in number:
                number[tc] = len(order)
                order.append(tc)
                queue.append(tc)
    delta = [
        {s: number[cls[t]] for s, t in sorted(trans[rep[c]].items()) if cls[t] != sink_cls} for c in order
    ]
    out = [outputs[rep[c]] for c in order]
    log_d(here, "states", f"{a.n_states} -> {len(order)}")
    if is_dfa:
        return Dfa(a.alphabet, delta, [o == 1 for o in out])
    return Dfao(a.alphabet, delta, out, 0, a.sink_output)


# --------------------------------------------------------------------------------------------------
# Products
# --------------------------------------------------------------------------------------------------
def _explore(
    start: tuple,
    successors: Callable[[tuple], list[tuple[int, tuple]]],
) -> tuple[list[tuple], list[dict[int, int]]]:
    """Breadth-first closure of a tuple-state product; `successors` omits transitions to the sink."""
    ids = {start: 0}
    states = [start]
    delta: list[dict[int, int]] = []
    i = 0
    while i < len(states):
        row: dict[int, int] = {}
        for sym, nxt in successors(states[i]):
            j = ids.get(nxt)
            if j is None:
                j = ids[nxt] = len(states)
                states.append(nxt)
            row[sym] = j
        delta.append(row)
        i += 1
    return states, delta


def product(a: Dfa, b: Dfa, op: BoolOp = BoolOp.AND) -> Dfa:
    check_same_alphabet(a, b)
    alphabet = a.alphabet
    keep_dead = op.apply(False, False)
    all_syms = list(alphabet.symbols())

    def successors(state: tuple) -> list[tuple[int, tuple]]:
        p, q = state
        if keep_dead:
            syms = all_syms
        else:
            syms = sorted(set(a.delta[p] if p is not None else ()) | set(b.delta[q] if q is not None else ()))
        out = []
        for s in syms:
            nxt = (a.step(p, s), b.step(q, s))
            if nxt == (None, None) and not keep_dead:
                continue
            out.append((s, nxt))
        return out

    states, delta = _explore((a.start, b.start), successors)
    accepting = [op.apply(a.output_of(p) == 1, b.output_of(q) == 1) for p, q in states]
    return minimize(Dfa(alphabet, delta, accepting))


def intersect(*automata: Dfa) -> Dfa:
    result = automata[0]
    for other in automata[1:]:
        result = product(result, other, BoolOp.AND)
    return result


def union(*automata: Dfa) -> Dfa:
    result = automata[0]
    for other in automata[1:]:
        result = product(result, other, BoolOp.OR)
    return result


def restrict(a: Dfao, domain: Dfa) -> Dfao:
    """Same outputs as `a` on words the domain accepts, no output elsewhere."""
    check_same_alphabet(a, domain)

    def successors(state: tuple) -> list[tuple[int, tuple]]:
        p, d = state
        return [(s, (a.step(p, s), t)) for s, t in sorted(domain.delta[d].items())]

    states, delta = _explore((a.start, domain.start), successors)
    outputs = [a.output_of(p) if domain.outputs[d] == 1 else None for p, d in states]
    return minimize(Dfao(a.alphabet, delta, outputs, 0, None))


def combine(parts: Sequence[tuple[Dfa, Output]], default: Output = 0, domain: Dfa | None = None) -> Dfao:
    """
    Dfao that outputs label_i where part i accepts and `default` where none does. With a
    domain, inputs outside it get no output. Two parts accepting the same input raise
    QdfaoOverlapError with the shortest such input as witness.
    """
    here = "algebra.combine"
    if not parts:
        raise QdfaoAlphabetError("combine needs at least one part")
    alphabet = parts[0][0].alphabet
    for dfa, _label in parts:
        check_same_alphabet(parts[0][0], dfa)
    if domain is not None:
        check_same_alphabet(parts[0][0], domain)
    k = len(parts)
    dead = (None,) * k
    all_syms = list(alphabet.symbols())

    def successors(state: tuple) -> list[tuple[int, tuple]]:
        ps, d = state[:k], state[k]
        if domain is not None:
            syms = sorted(domain.delta[d])
        elif ps == dead:
            syms = all_syms
        else:
            syms = sorted({s for (dfa, _), p in zip(parts, ps, strict=True) if p is not None for s in dfa.delta[p]})
        out = []
        for s in syms:
            nps = tuple(dfa.step(p, s) for (dfa, _), p in zip(parts, ps, strict=True))
            if domain is not None:
                out.append((s, nps + (domain.delta[d][s],)))
            elif nps == dead:
                out.append((s, dead + (None,)))
            else:
                out.append((s, nps + (None,)))
        if domain is None and ps != dead:
            # symbols no part defines lead to the all-dead state, which outputs `default`
            for s in all_syms:
                if not any(p is not None and s in dfa.delta[p] for (dfa, _), p in zip(parts, ps, strict=True)):
                    out.append((s, dead + (None,)))
        return sorted(out, key=lambda e: e[0])

    start = tuple(dfa.start for dfa, _ in parts) + (domain.start if domain is not None else None,)
    states, delta = _explore(start, successors)

    outputs: list[Output] = []
    for i, state in enumerate(states):
        ps, d = state[:k], state[k]
        if domain is not None and domain.outputs[d] != 1:
            outputs.append(None)
            continue
        hits = [label for (dfa, label), p in zip(parts, ps, strict=True) if dfa.output_of(p) == 1]
        if len(hits) > 1:
            witness = _witness(delta, i)
            raise QdfaoOverlapError(f"labels {hits} accept the same input {witness}", witness=witness)
        outputs.append(hits[0] if hits else default)
    result = minimize(Dfao(alphabet, delta, outputs, 0, None))
    log_d(here, "combined parts", k, "states", result.n_states)
    return result


def _witness(delta: list[dict[int, int]], target: int) -> list[int]:
    parent: dict[int, tuple[int, int]] = {}
    seen = {0}
    queue = deque([0])
    while queue:
        q = queue.popleft()
        if q == target:
            break
        for s, t in sorted(delta[q].items()):
            if t not in seen:
                seen.add(t)
                parent[t] = (q, s)
                queue.append(t)
    word: list[int] = []
    q = target
    while q != 0:
        q, s = parent[q]
        word.append(s)
    word.reverse()
    return word


# --------------------------------------------------------------------------------------------------
# Subset construction and projection
# --------------------------------------------------------------------------------------------------
def determinize(nfa: Nfa) -> Dfa:
    start = frozenset(nfa.starts)
    if not start:
        return Dfa(nfa.alphabet, [{}], [False])

    def successors(state: tuple) -> list[tuple[int, tuple]]:
        (subset,) = state
        acc: dict[int, set[int]] = {}
        for q in subset:
            for s, ts in nfa.delta[q].items():
                acc.setdefault(s, set()).update(ts)
        return [(s, (frozenset(ts),)) for s, ts in sorted(acc.items())]

    states, delta = _explore((start,), successors)
    accepting = [bool(subset & nfa.accepting) for (subset,) in states]
    return Dfa(nfa.alphabet, delta, accepting)


def erase_tape(a: Dfa, tape: int) -> Nfa:
    """
    Forgets one tape. The erased value may be longer than the rest, so every state reachable
    from the start through columns that are zero on the remaining tapes is a start state.
    """
    alphabet = a.alphabet.drop(tape)
    columns = a.alphabet.columns
    rename = [alphabet.encode(col[:tape] + col[tape + 1 :]) for col in columns]
    delta: list[dict[int, set[int]]] = [{} for _ in range(a.n_states)]
    for q, row in enumerate(a.delta):
        for s, t in row.items():
            delta[q].setdefault(rename[s], set()).add(t)
    starts = {a.start}
    queue = deque(starts)
    while queue:
        q = queue.popleft()
        for t in delta[q].get(0, ()):
            if t not in starts:
                starts.add(t)
                queue.append(t)
    return Nfa(alphabet, delta, starts, a.accepting if isinstance(a, Dfa) else [])


def project(a: Dfa, tape: int) -> Dfa:
    """Existential quantification over one tape."""
    if a.alphabet.arity < 2:
        raise QdfaoAlphabetError("cannot project the only tape")
    return minimize(determinize(erase_tape(a, tape)))


def reorder_tapes(a: Dfa, order: Sequence[int]) -> Dfa:
    """New tape j reads old tape order[j]."""
    if sorted(order) != list(range(a.alphabet.arity)):
        raise QdfaoAlphabetError(f"{list(order)} is not a permutation of the tapes")
    alphabet = a.alphabet.select(order)
    columns = a.alphabet.columns
    rename = [alphabet.encode(tuple(col[i] for i in order)) for col in columns]
    delta = [{rename[s]: t for s, t in row.items()} for row in a.delta]
    return minimize(Dfa(alphabet, delta, [o == 1 for o in a.outputs], a.start))


def join_tapes(a: Dfa, a_tapes: Sequence[int], b: Dfa, b_tapes: Sequence[int], alphabet: Alphabet) -> Dfa:
    """
    Synchronized conjunction of two relations whose tapes are placed into a wider alphabet:
    tape i of `a` becomes tape a_tapes[i] of the result, likewise for `b`. Shared result
    tapes must read the same digit in both. Every result tape must come from a or b.
    """
    if set(a_tapes) | set(b_tapes) != set(range(alphabet.arity)):
        raise QdfaoAlphabetError("joined tapes must cover the result alphabet")
    shared = sorted(set(a_tapes) & set(b_tapes))
    a_pos = {t: i for i, t in enumerate(a_tapes)}
    b_pos = {t: i for i, t in enumerate(b_tapes)}
    b_only = [t for t in range(alphabet.arity) if t not in a_pos]
    a_cols = a.alphabet.columns
    b_cols = b.alphabet.columns

    def successors(state: tuple) -> list[tuple[int, tuple]]:
        p, q = state
        by_key: dict[tuple, list[tuple[int, int]]] = {}
        for sb, tb in b.delta[q].items():
            col = b_cols[sb]
            by_key.setdefault(tuple(col[b_pos[t]] for t in shared), []).append((sb, tb))
        out = []
        for sa, ta in a.delta[p].items():
            acol = a_cols[sa]
            for sb, tb in by_key.get(tuple(acol[a_pos[t]] for t in shared), ()):
                bcol = b_cols[sb]
                col = [0] * alphabet.arity
                for t, i in a_pos.items():
                    col[t] = acol[i]
                for t in b_only:
                    col[t] = bcol[b_pos[t]]
                out.append((alphabet.encode(col), (ta, tb)))
        out.sort(key=lambda e: e[0])
        return out

    states, delta = _explore((a.start, b.start), successors)
    accepting = [a.outputs[p] == 1 and b.outputs[q] == 1 for p, q in states]
    return minimize(Dfa(alphabet, delta, accepting))
