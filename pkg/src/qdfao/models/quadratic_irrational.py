# qdfao/models/quadratic_irrational.py
"""
QuadraticIrrational: exact value (a + b*sqrt(d)) / c with integer components.

Fields are normalized at construction: c > 0 and gcd(a, b, c) = 1, so two equal
values always compare equal field by field.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.utils.surd_utils import floor_surd, is_square_free, normalize, split_square, surd_sign


class QuadraticIrrational(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    d: int
    c: int = 1

    # ----------------------------------------------------------------------------------------------
    # Validators
    # ----------------------------------------------------------------------------------------------
    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any):
        if not isinstance(data, dict):
            return data
        try:
            a, b, d, c = (int(data.get(k, 1 if k == "c" else 0)) for k in ("a", "b", "d", "c"))
        except (TypeError, ValueError) as e:
            raise QdfaoInputError(f"quadratic irrational components must be integers: {data}") from e
        if b == 0:
            raise QdfaoInputError("b = 0 gives a rational number")
        if d < 2 or not is_square_free(d):
            raise QdfaoInputError(f"d must be a square-free integer >= 2, got {d}")
        if c == 0:
            raise QdfaoInputError("c must be nonzero")
        a, b, d, c = normalize(a, b, d, c)
        return {"a": a, "b": b, "d": d, "c": c}

    # ----------------------------------------------------------------------------------------------
    # Builders
    # ----------------------------------------------------------------------------------------------
    @classmethod
    def from_surd(cls, a: int, b: int, radicand: int, c: int) -> QuadraticIrrational:
        """(a + b*sqrt(radicand)) / c with square factors of the radicand pulled out."""
        s, r = split_square(radicand)
        return cls(a=a, b=b * s, d=r, c=c)

    @classmethod
    def from_rational_parts(cls, r: Fraction, s: Fraction, d: int) -> QuadraticIrrational:
        """r + s*sqrt(d)"""
        den = lcm(r.denominator, s.denominator)
        return cls(a=int(r * den), b=int(s * den), d=d, c=den)

    # ----------------------------------------------------------------------------------------------
    # Arithmetic
    # ----------------------------------------------------------------------------------------------
    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.a, self.c)

    @property
    def surd_part(self) -> Fraction:
        return Fraction(self.b, self.c)

    def sign(self) -> int:
        return surd_sign(self.a, self.b, self.d)

    def floor(self) -> int:
        return floor_surd(self.a, self.b, self.d, self.c)

    def scaled_floor(self, n: int) -> int:
        """floor(n * self) for an integer n"""
        if n == 0:
            return 0
        return floor_surd(n * self.a, n * self.b, self.d, self.c)

    def reciprocal(self) -> QuadraticIrrational:
        # c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        den = self.a * self.a - self.b * self.b * self.d
        return QuadraticIrrational(a=self.c * self.a, b=-self.c * self.b, d=self.d, c=den)

    def __add__(self, other: int | Fraction) -> QuadraticIrrational:
        if isinstance(other, int | Fraction):
            return QuadraticIrrational.from_rational_parts(self.rational_part + other, self.surd_part, self.d)
        return NotImplemented

    def __sub__(self, other: int | Fraction) -> QuadraticIrrational:
        if isinstance(other, int | Fraction):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other: int | Fraction) -> QuadraticIrrational:
        if isinstance(other, int | Fraction):
            if other == 0:
                raise QdfaoInputError("multiplying by zero gives a rational number")
            return QuadraticIrrational.from_rational_parts(self.rational_part * other, self.surd_part * other, self.d)
        return NotImplemented

    def __str__(self) -> str:
        coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        op = "+" if self.b > 0 else "-"
        head = f"{self.a}{op}" if self.a else ("" if self.b > 0 else "-")
        body = f"{head}{coef}sqrt({self.d})"
        return f"({body})/{self.c}" if self.c != 1 else body
