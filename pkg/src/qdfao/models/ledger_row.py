# qdfao/models/ledger_row.py
from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict


class CellStatus(StrEnum):
    SAT = "SAT"
    UNSAT = "UNSAT"


class LedgerRow(BaseModel):
    """One (states, digit set) cell of the minimality search."""

    model_config = ConfigDict(frozen=True)

    states: int
    digit_set: int
    status: CellStatus
    verified: bool | None = None
    failing_index: int | None = None
    candidates: int | None = None
    variables: int = 0
    clauses: int = 0

    def to_line(self) -> str:
        verified = "-" if self.verified is None else ("pass" if self.verified else f"fail@{self.failing_index}")
        cands = "-" if self.candidates is None else str(self.candidates)
        return f"{self.states}\t{self.digit_set}\t{self.status}\t{verified}\t{cands}\t{self.variables}\t{self.clauses}"

    @staticmethod
    def header() -> str:
        return "states\tdigit_set\tstatus\tverified\tcandidates\tvariables\tclauses"
