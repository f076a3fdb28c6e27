# qdfao/satmin/ladder.py
"""
Minimality search: grow the number of states while the instance is UNSAT, grow the digit
set while a SAT answer fails the exact-digit check, and enumerate once a candidate passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from qdfao.automata.dfao import Dfao
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.ledger_row import CellStatus, LedgerRow
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.satmin.apta import build_apta, build_cg
from qdfao.satmin.decode import decode_model, enumerate_all, verify_candidate
from qdfao.satmin.dictionary import build_dictionary
from qdfao.satmin.encoding import ConstraintSet, Granularity, encode
from qdfao.satmin.solvers import SatSolverBase
from qdfao.utils.log import log_d, log_i


@dataclass
class LadderOutcome:
    rows: list[LedgerRow] = field(default_factory=list)
    states: int | None = None
    digit_set: int | None = None
    candidates: list[Dfao] = field(default_factory=list)
    verified: list[bool] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.states is not None

    def to_table(self) -> str:
        return "\n".join([LedgerRow.header()] + [row.to_line() for row in self.rows])


def search_ladder(
    link: BetaLinkage,
    b: int,
    solver: SatSolverBase,
    *,
    k_start: int = 1,
    digit_set: int = 1,
    step: int = 1,
    n_max: int = 10_000,
    max_states: int = 64,
    max_digit_set: int = 4096,
    constraints: ConstraintSet | str | None = None,
    granularity: Granularity | str = Granularity.TRANSITIONS,
    symmetry_breaking: bool = True,
    enumerate_candidates: bool = True,
) -> LadderOutcome:
    here = "ladder.search"
    if k_start < 1 or digit_set < 1 or step < 1:
        raise QdfaoInputError("k_start, digit_set and step must be positive")
    sys = link.system
    out = LadderOutcome()
    k = k_start
    while k <= max_states and digit_set <= max_digit_set:
        d = build_dictionary(link, b, digit_set)
        apta = build_apta(d)
        enc = encode(apta, build_cg(apta), k, sys, constraints, symmetry_breaking, labels=tuple(range(b)))
        result = solver.solve(enc)
        if not result.satisfiable:
            out.rows.append(
                LedgerRow(
                    states=k,
                    digit_set=digit_set,
                    status=CellStatus.UNSAT,
                    variables=enc.n_vars,
                    clauses=len(enc.clauses),
                )
            )
            log_d(here, f"k={k} set={digit_set}", "UNSAT")
            k += 1
            continue
        first = decode_model(enc, result, sys)
        failing = verify_candidate(first, link, b, n_max)
        if failing is not None:
            out.rows.append(
                LedgerRow(
                    states=k,
                    digit_set=digit_set,
                    status=CellStatus.SAT,
                    verified=False,
                    failing_index=failing,
                    variables=enc.n_vars,
                    clauses=len(enc.clauses),
                )
            )
            log_d(here, f"k={k} set={digit_set}", f"SAT, fails at {failing}")
            digit_set += step
            continue
        cands = enumerate_all(enc, solver, sys, granularity) if enumerate_candidates else [first]
        out.verified = [verify_candidate(c, link, b, n_max) is None for c in cands]
        out.candidates = cands
        out.states, out.digit_set = k, digit_set
        out.rows.append(
            LedgerRow(
                states=k,
                digit_set=digit_set,
                status=CellStatus.SAT,
                verified=True,
                candidates=len(cands),
                variables=enc.n_vars,
                clauses=len(enc.clauses),
            )
        )
        log_i(here, f"{link.alpha} base {b}", f"{k} states, digit set {digit_set}, {len(cands)} candidates")
        return out
    log_i(here, "gave up", f"k={k} digit set {digit_set}")
    return out
