# qdfao/models/continued_fraction.py
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class ContinuedFraction(BaseModel):
    """
    Eventually periodic simple continued fraction [d0; d1, ..., (p1, ..., pm)].

    `preperiod` always holds d0 and whatever precedes the repeating block; `period` is the
    repeating block itself, so m = len(period).
    """

    model_config = ConfigDict(frozen=True)

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    @field_validator("period")
    @classmethod
    def _check_period(cls, period: tuple[int, ...]):
        if not period:
            raise ValueError("period must be non-empty")
        if any(p < 1 for p in period):
            raise ValueError(f"period entries must be positive, got {period}")
        return period

    @model_validator(mode="after")
    def _check_preperiod(self):
        if not self.preperiod:
            raise ValueError("preperiod must at least hold d0")
        if any(p < 1 for p in self.preperiod[1:]):
            raise ValueError(f"partial quotients after d0 must be positive, got {self.preperiod}")
        return self

    @property
    def m(self) -> int:
        return len(self.period)

    @property
    def d0(self) -> int:
        return self.preperiod[0]

    @property
    def is_purely_periodic_tail(self) -> bool:
        """True when the period starts right after d0."""
        return len(self.preperiod) == 1

    def partial_quotient(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % self.m]

    def __str__(self) -> str:
        head = ", ".join(str(d) for d in self.preperiod[1:])
        block = "(" + ", ".join(str(d) for d in self.period) + ")"
        tail = f"{head}, {block}" if head else block
        return f"[{self.d0}; {tail}]"
