# qdfao/numeration/validity.py
from __future__ import annotations

from functools import lru_cache

from qdfao.automata.algebra import determinize, minimize
from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa
from qdfao.automata.nfa import Nfa
from qdfao.models.numeration_system import NumerationSystem
from qdfao.utils.log import log_d


def digit_alphabet(sys: NumerationSystem) -> Alphabet:
    return Alphabet((sys.max_digit + 1,))


@lru_cache(maxsize=64)
def validity_dfa(sys: NumerationSystem) -> Dfa:
    """
    Minimal DFA of the valid digit strings, leading zeros allowed.

    Reading most significant first, the position of the digit being read is unknown until
    the end, so only its residue mod m is tracked: each branch guesses the residue of the
    first position and must land on position 0 at the end. The flag records that the
    previous digit hit its bound, forcing the current digit to 0.
    """
    here = "validity.dfa"
    m = sys.phase_count
    alphabet = digit_alphabet(sys)
    ids: dict[tuple[int, bool], int] = {}
    for p in range(m):
        for f in (False, True):
            ids[(p, f)] = len(ids)
    delta: list[dict[int, set[int]]] = [{} for _ in ids]
    for (p, f), q in ids.items():
        bound = sys.digit_bound(p)
        top = 0 if f else bound
        for a in range(top + 1):
            delta[q].setdefault(a, set()).add(ids[((p - 1) % m, a == bound)])
    # after the last digit the phase has moved past position 0
    final_phase = (0 - 1) % m
    accepting = [ids[(final_phase, False)]]
    if sys.is_fibonacci:
        accepting.append(ids[(final_phase, True)])
    starts = [ids[(p, False)] for p in range(m)]
    dfa = minimize(determinize(Nfa(alphabet, delta, starts, accepting)))
    log_d(here, str(sys), dfa.n_states)
    return dfa


def base_state_labels(dfa: Dfa) -> list[str]:
    return [f"B{q}" for q in range(dfa.n_states)]
