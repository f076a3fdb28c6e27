# qdfao/satmin/decode.py
from __future__ import annotations

from qdfao.automata.dfao import Dfao
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.numeration.validity import digit_alphabet
from qdfao.qexact.qexact import expansion
from qdfao.satmin.dictionary import Dictionary
from qdfao.satmin.encoding import CnfEncoding, Granularity
from qdfao.satmin.solvers import SatSolverBase, SolveResult
from qdfao.utils.log import log_d


def decode_model(enc: CnfEncoding, result: SolveResult, sys: NumerationSystem) -> Dfao:
    """Reads the y and o variables of a SAT model as a k-state Dfao; missing edges go to the sink."""
    if not result.satisfiable:
        raise QdfaoInputError("cannot decode an UNSAT result")
    k = enc.k
    delta: list[dict[int, int]] = [{} for _ in range(k)]
    for a in range(enc.alphabet_size):
        for i in range(k):
            for j in range(k):
                if result.value(enc.var("y", a, i, j)):
                    delta[i][a] = j
    outputs: list[int | None] = [None] * k
    for i in range(k):
        for s in enc.labels:
            if result.value(enc.var("o", i, s)):
                outputs[i] = s
    return Dfao(digit_alphabet(sys), delta, outputs, start=0, sink_output=None)


def base_mapping(enc: CnfEncoding, result: SolveResult) -> dict[int, int]:
    """color -> validity DFA state, for encodings with base-state variables"""
    out = {}
    for i in range(enc.k):
        for key, v in enc.pool.obj2id.items():
            if key[0] == "b" and key[1] == i and result.value(v):
                out[i] = key[2]
    return out


def enumerate_all(
    enc: CnfEncoding,
    solver: SatSolverBase,
    sys: NumerationSystem,
    granularity: Granularity | str = Granularity.TRANSITIONS,
    limit: int | None = None,
) -> list[Dfao]:
    """Every candidate, told apart by transitions and outputs (and base types under WITH_BASE)."""
    here = "decode.enumerate"
    block = enc.block_vars(granularity)
    seen: list[Dfao] = []
    for result in solver.models(enc, block, limit):
        cand = decode_model(enc, result, sys)
        if cand not in seen:
            seen.append(cand)
    log_d(here, f"k={enc.k} {granularity}", len(seen))
    return seen


def consistent_with(cand: Dfao, d: Dictionary) -> int | None:
    """Index of the first dictionary entry the candidate gets wrong, None if it agrees on all."""
    for idx, (digits, out) in enumerate(d.entries):
        if cand.run(digits) != out:
            return idx
    return None


def verify_candidate(cand: Dfao, link: BetaLinkage, b: int, n_max: int) -> int | None:
    """
    Runs the candidate on the representation of b^n for n < n_max against the exact digits.
    Returns the first failing n, or None when all agree.
    """
    here = "decode.verify"
    _int_part, digits = expansion(link.alpha, b, n_max)
    sys = link.system
    power = 1
    for n in range(n_max):
        if cand.run(sys.encode(power)) != digits[n]:
            log_d(here, "first failure", n)
            return n
        power *= b
    log_d(here, "pass", n_max)
    return None
