# qdfao/linrel/relation_builder.py
"""
Synchronized DFAs for linear relations over a numeration system.

Digits are read most significant first. With r positions still unread, the digits read
so far contribute X*U_r + Y*U_{r-1} to the left side, where U is the system basis.
Reading the digit at position r-1 uses U_r = d_r U_{r-1} + U_{r-2}:

    X' = d_r X + Y + sum_j c_j A_j a_j
    Y' = X + sum_j c_j B_j a_j

where U_{r-1+s_j} = A_j U_{r-1} + B_j U_{r-2} carries the shift of term j. Only r mod m
is tracked: each of the m branches guesses the residue of the input length, and only the
branch that ends on residue 0 may accept, when X + Y U_{-1} equals the constant.

A carry state is dropped as soon as no completion of length r (r up to a horizon where
the basis ratios have converged) can bring the left side back to the constant.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from qdfao.automata.algebra import determinize, join_tapes, minimize
from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa
from qdfao.automata.nfa import Nfa
from qdfao.conf.read_conf import DEFAULT_STATE_CAP
from qdfao.models.linear_relation import LinearRelation
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoConstructionError, QdfaoInputError
from qdfao.numeration.validity import validity_dfa
from qdfao.utils.log import log_d

PRUNE_HORIZON = 48

_state_cap = DEFAULT_STATE_CAP

CarryState = tuple[int, int, int]


def shift_weights(sys: NumerationSystem, rho: int, shift: int) -> tuple[int, int]:
    """(A, B) with U_{j+shift} = A U_j + B U_{j-1} for every position j = rho (mod m)."""
    m = sys.phase_count
    a_prev, b_prev = 0, 1
    a, b = 1, 0
    for s in range(shift):
        d = sys.period[(rho + s) % m]
        a, a_prev = d * a + a_prev, a
        b, b_prev = d * b + b_prev, b
    return a, b


def relation_alphabet(sys: NumerationSystem, k: int) -> Alphabet:
    return Alphabet.tapes(k, sys.max_digit + 1)


class _CarryAutomaton:
    """Explicit carry-state Nfa for one relation, before validity checks and minimization."""

    def __init__(self, rel: LinearRelation, state_cap: int):
        self.rel = rel
        self.sys = rel.system
        self.m = self.sys.phase_count
        self.k = len(rel.tapes)
        self.state_cap = state_cap
        self.alphabet = relation_alphabet(self.sys, self.k)
        self.effects = [self._effects(rho) for rho in range(self.m)]
        self.windows = [self._windows(p) for p in range(self.m)]

    def _effects(self, rho: int) -> list[tuple[int, int, list[int]]]:
        """Columns allowed at positions = rho (mod m), grouped by their (X, Y) increments."""
        bound = self.sys.digit_bound(rho)
        weights = [(t, shift_weights(self.sys, rho, t.shift)) for t in self.rel.terms]
        groups: dict[tuple[int, int], list[int]] = {}
        for sym, col in enumerate(self.alphabet.columns):
            if max(col) > bound:
                continue
            ea = sum(t.coefficient * wa * col[t.tape] for t, (wa, _wb) in weights)
            eb = sum(t.coefficient * wb * col[t.tape] for t, (_wa, wb) in weights)
            groups.setdefault((ea, eb), []).append(sym)
        return [(ea, eb, syms) for (ea, eb), syms in sorted(groups.items())]

    def _windows(self, p: int) -> list[tuple[int, int, int]]:
        """(U_r, U_{r-1}, largest remaining contribution) for the lengths r = p (mod m) that are checked."""
        out = []
        r = p
        while r <= PRUNE_HORIZON + self.m:
            slack = 0
            for t in self.rel.terms:
                slack += abs(t.coefficient) * sum(
                    self.sys.digit_bound(i) * self.sys.basis(i + t.shift) for i in range(r)
                )
            out.append((self.sys.basis(r), self.sys.basis(r - 1), slack))
            r += self.m
        return out

    def alive(self, state: CarryState) -> bool:
        p, x, y = state
        c0 = self.rel.constant
        return any(abs(x * u + y * u_prev - c0) <= slack for u, u_prev, slack in self.windows[p])

    def accepting(self, state: CarryState) -> bool:
        p, x, y = state
        return p == 0 and x + y * self.sys.u_minus_one == self.rel.constant

    def build(self) -> Nfa:
        here = "relation.build"
        ids: dict[CarryState, int] = {}
        states: list[CarryState] = []
        for p in range(self.m):
            ids[(p, 0, 0)] = len(states)
            states.append((p, 0, 0))
        starts = list(range(len(states)))
        delta: list[dict[int, set[int]]] = []
        queue = deque(range(len(states)))
        while queue:
            i = queue.popleft()
            p, x, y = states[i]
            rho = (p - 1) % self.m
            d = self.sys.period[rho]
            row: dict[int, set[int]] = {}
            for ea, eb, syms in self.effects[rho]:
                nxt = (rho, d * x + y + ea, x + eb)
                j = ids.get(nxt)
                if j is None:
                    if not self.alive(nxt):
                        continue
                    j = ids[nxt] = len(states)
                    states.append(nxt)
                    queue.append(j)
                    if len(states) > self.state_cap:
                        raise QdfaoConstructionError(
                            f"more than {self.state_cap} carry states", relation=str(self.rel)
                        )
                for sym in syms:
                    row[sym] = {j}
            # states are numbered in queue order, so row i is appended as the i-th row
            delta.append(row)
        accepting = [i for i, s in enumerate(states) if self.accepting(s)]
        log_d(here, str(self.rel), f"{len(states)} carry states")
        return Nfa(self.alphabet, delta, starts, accepting)


def set_state_cap(cap: int) -> None:
    """Carry-state limit used when `relation_dfa` is called without one."""
    global _state_cap
    if cap < 1:
        raise QdfaoInputError(f"state cap must be positive, got {cap}")
    _state_cap = cap


def relation_dfa(rel: LinearRelation, state_cap: int | None = None) -> Dfa:
    """
    Minimal DFA over k-tuples accepting exactly the equal-length (zero padded) tuples of
    valid representations that satisfy the relation.
    """
    return _relation_dfa(rel, _state_cap if state_cap is None else state_cap)


@lru_cache(maxsize=256)
def _relation_dfa(rel: LinearRelation, state_cap: int) -> Dfa:
    here = "relation.dfa"
    dfa = minimize(determinize(_CarryAutomaton(rel, state_cap).build()))
    valid = validity_dfa(rel.system)
    k = len(rel.tapes)
    for tape in range(k):
        dfa = join_tapes(dfa, list(range(k)), valid, [tape], dfa.alphabet)
    log_d(here, str(rel), dfa.n_states)
    return dfa
