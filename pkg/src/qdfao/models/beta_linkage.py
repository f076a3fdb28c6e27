# qdfao/models/beta_linkage.py
from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.quadratic_irrational import QuadraticIrrational


class BetaLinkage(BaseModel):
    """
    alpha = (a + b*beta) / c with b, c >= 1, where beta carries the numeration system.

    For Ostrowski and Pell systems beta = [0; d_1, ..., d_m] with d_1 > 1 and q_m, q_{m-1}
    are basis terms of the system. For the Zeckendorf case beta is the golden ratio itself
    and the q fields are unset.
    """

    model_config = ConfigDict(frozen=True)

    alpha: QuadraticIrrational
    beta: QuadraticIrrational
    system: NumerationSystem
    a: int
    b: int
    c: int
    q_m: int | None = None
    q_m_minus_1: int | None = None

    @model_validator(mode="after")
    def _check_linkage(self):
        if self.b < 1 or self.c < 1:
            raise ValueError(f"b and c must be at least 1, got b={self.b}, c={self.c}")
        if self.reconstruct() != self.alpha:
            raise ValueError(f"({self.a} + {self.b}*beta)/{self.c} does not equal {self.alpha}")
        if not self.system.is_fibonacci:
            m = self.m
            if (self.q_m, self.q_m_minus_1) != (self.system.basis(m), self.system.basis(m - 1)):
                raise ValueError("q_m and q_{m-1} must be basis terms of the system")
        return self

    @property
    def m(self) -> int:
        return self.system.phase_count

    @property
    def period(self) -> tuple[int, ...]:
        return self.system.period

    def reconstruct(self) -> QuadraticIrrational:
        beta = self.beta
        return QuadraticIrrational.from_rational_parts(
            (beta.rational_part * self.b + self.a) / Fraction(self.c),
            beta.surd_part * self.b / Fraction(self.c),
            beta.d,
        )

    def __str__(self) -> str:
        return f"{self.alpha} = ({self.a} + {self.b}*beta)/{self.c}, beta = {self.beta} over {self.system}"
