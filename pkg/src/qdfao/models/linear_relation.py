# qdfao/models/linear_relation.py
"""
LinearRelation: one equation  sum_j c_j * val(shift^{s_j}(x_{t_j})) = c_0  over named tapes.

A tape may occur in several terms (e.g. `3z + 8u - shift2(u) = 0`); shift^s appends s
zeros to the digit string, so val(shift^s(x)) = sum_i a_i U_{i+s}.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from qdfao.models.numeration_system import NumerationSystem


class RelationTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    tape: int
    coefficient: int
    shift: int = 0

    @field_validator("shift")
    @classmethod
    def _check_shift(cls, shift: int):
        if shift < 0:
            raise ValueError(f"shift must be non-negative, got {shift}")
        return shift


class LinearRelation(BaseModel):
    model_config = ConfigDict(frozen=True)

    system: NumerationSystem
    tapes: tuple[str, ...]
    terms: tuple[RelationTerm, ...]
    constant: int = 0

    # ----------------------------------------------------------------------------------------------
    # Validators
    # ----------------------------------------------------------------------------------------------
    @model_validator(mode="after")
    def _check_terms(self):
        if not self.tapes:
            raise ValueError("a relation needs at least one tape")
        if len(set(self.tapes)) != len(self.tapes):
            raise ValueError(f"tape names must be unique, got {self.tapes}")
        if not any(t.coefficient for t in self.terms):
            raise ValueError("at least one coefficient must be nonzero")
        if any(not 0 <= t.tape < len(self.tapes) for t in self.terms):
            raise ValueError("term refers to an unknown tape")
        return self

    # ----------------------------------------------------------------------------------------------
    # Builders
    # ----------------------------------------------------------------------------------------------
    @classmethod
    def of(
        cls,
        system: NumerationSystem,
        coefficients: Mapping[str, int],
        constant: int = 0,
        shifts: Mapping[str, int] | None = None,
    ) -> LinearRelation:
        """One term per tape, tapes in mapping order: of(fib, {"x": 1, "y": -2}, 1) is x - 2y = 1."""
        shifts = shifts or {}
        tapes = tuple(coefficients)
        terms = tuple(
            RelationTerm(tape=i, coefficient=coefficients[name], shift=shifts.get(name, 0))
            for i, name in enumerate(tapes)
        )
        return cls(system=system, tapes=tapes, terms=terms, constant=constant)

    # ----------------------------------------------------------------------------------------------
    # Oracle
    # ----------------------------------------------------------------------------------------------
    @property
    def max_shift(self) -> int:
        return max((t.shift for t in self.terms), default=0)

    def left_side(self, digits: Sequence[Sequence[int]]) -> int:
        """Value of the left side for one digit string per tape (any lengths)."""
        total = 0
        for t in self.terms:
            ds = digits[t.tape]
            top = len(ds) - 1
            total += t.coefficient * sum(a * self.system.basis(top - i + t.shift) for i, a in enumerate(ds))
        return total

    def holds(self, digits: Sequence[Sequence[int]]) -> bool:
        return self.left_side(digits) == self.constant

    def __str__(self) -> str:
        parts: list[str] = []
        for t in self.terms:
            if not t.coefficient:
                continue
            name = self.tapes[t.tape]
            var = f"shift{t.shift}({name})" if t.shift else name
            mag = abs(t.coefficient)
            body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if t.coefficient > 0 else f"-{body}")
            else:
                parts.append(("+ " if t.coefficient > 0 else "- ") + body)
        return f"{self.system}: {' '.join(parts)} = {self.constant}"
