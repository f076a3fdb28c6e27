# qdfao/models/numeration_system.py
"""
NumerationSystem: Zeckendorf, Pell or purely periodic Ostrowski numeration.

The three kinds share one digit rule set driven by the (cyclic) partial quotients
d_1, d_2, ...: fibonacci uses d = 1 everywhere, pell uses d = 2 everywhere. Only the
fibonacci kind differs, by allowing a_0 = 1 and by its basis starting at F_2.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from enum import StrEnum
from threading import Lock
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from qdfao.models.qdfao_errors import QdfaoInputError, QdfaoParseError, QdfaoRepresentationError

_OST_PATTERN = re.compile(r"^ost\s*:?\s*\[(?P<period>[\d,\s]+)\]$")

# Basis sequences are shared between equal systems; indices only ever grow.
_BASIS_CACHE: dict[tuple[str, tuple[int, ...]], list[int]] = {}
_BASIS_LOCK = Lock()


class NumerationKind(StrEnum):
    FIBONACCI = "fib"
    PELL = "pell"
    OSTROWSKI = "ost"


class NumerationSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: NumerationKind
    period: tuple[int, ...] = ()

    # ----------------------------------------------------------------------------------------------
    # Validators
    # ----------------------------------------------------------------------------------------------
    @model_validator(mode="before")
    @classmethod
    def _fill_period(cls, data: Any):
        if not isinstance(data, dict):
            return data
        kind = NumerationKind(data.get("kind"))
        if kind == NumerationKind.FIBONACCI:
            return {"kind": kind, "period": (1,)}
        if kind == NumerationKind.PELL:
            return {"kind": kind, "period": (2,)}
        period = tuple(data.get("period") or ())
        if not period:
            raise QdfaoInputError("an Ostrowski system needs a non-empty period")
        if any(int(d) < 1 for d in period):
            raise QdfaoInputError(f"period entries must be positive, got {period}")
        return {"kind": kind, "period": tuple(int(d) for d in period)}

    # ----------------------------------------------------------------------------------------------
    # Builders
    # ----------------------------------------------------------------------------------------------
    @classmethod
    def fibonacci(cls) -> NumerationSystem:
        return cls(kind=NumerationKind.FIBONACCI)

    @classmethod
    def pell(cls) -> NumerationSystem:
        return cls(kind=NumerationKind.PELL)

    @classmethod
    def ostrowski(cls, period: Sequence[int]) -> NumerationSystem:
        return cls(kind=NumerationKind.OSTROWSKI, period=tuple(period))

    @classmethod
    def parse(cls, text: str) -> NumerationSystem:
        """`fib`, `pell` or `ost:[d1,...,dm]`"""
        compact = text.strip().lower()
        if compact in ("fib", "fibonacci", "zeckendorf"):
            return cls.fibonacci()
        if compact == "pell":
            return cls.pell()
        m = _OST_PATTERN.match(compact)
        if not m:
            raise QdfaoParseError("expected fib, pell or ost:[d1,...,dm]", text=text)
        try:
            period = tuple(int(p) for p in m.group("period").split(",") if p.strip())
        except ValueError as e:
            raise QdfaoParseError("bad period", text=text) from e
        return cls.ostrowski(period)

    # ----------------------------------------------------------------------------------------------
    # Digit rules
    # ----------------------------------------------------------------------------------------------
    @property
    def is_fibonacci(self) -> bool:
        return self.kind == NumerationKind.FIBONACCI

    @property
    def phase_count(self) -> int:
        return len(self.period)

    @property
    def max_digit(self) -> int:
        return max(self.period)

    def recurrence_coefficient(self, r: int) -> int:
        """d_r, the multiplier in U_r = d_r U_{r-1} + U_{r-2} (r >= 1)."""
        if r < 1:
            raise QdfaoInputError(f"recurrence index must be >= 1, got {r}")
        return self.period[(r - 1) % len(self.period)]

    def digit_bound(self, i: int) -> int:
        """d_{i+1}, the largest digit allowed at position i (position 0 is least significant)."""
        if i < 0:
            raise QdfaoInputError(f"digit position must be non-negative, got {i}")
        return self.period[i % len(self.period)]

    # ----------------------------------------------------------------------------------------------
    # Basis
    # ----------------------------------------------------------------------------------------------
    @property
    def u_minus_one(self) -> int:
        return 1 if self.is_fibonacci else 0

    def basis(self, i: int) -> int:
        if i == -1:
            return self.u_minus_one
        if i < -1:
            raise QdfaoInputError(f"basis index must be >= -1, got {i}")
        key = (self.kind.value, self.period)
        seq = _BASIS_CACHE.get(key)
        if seq is not None and i < len(seq):
            return seq[i]
        with _BASIS_LOCK:
            seq = _BASIS_CACHE.setdefault(key, [1])
            while len(seq) <= i:
                r = len(seq)
                prev2 = seq[r - 2] if r >= 2 else self.u_minus_one
                seq.append(self.recurrence_coefficient(r) * seq[r - 1] + prev2)
            return seq[i]

    # ----------------------------------------------------------------------------------------------
    # Representations
    # ----------------------------------------------------------------------------------------------
    def is_valid(self, digits: Sequence[int]) -> bool:
        ds = list(digits)
        while len(ds) > 1 and ds[0] == 0:
            ds.pop(0)
        if not ds:
            return True
        top = len(ds) - 1
        for idx, a in enumerate(ds):
            pos = top - idx
            bound = self.digit_bound(pos)
            if a < 0 or a > bound:
                return False
            if pos == 0:
                if not self.is_fibonacci and a == bound:
                    return False
            elif a == bound and ds[idx + 1] != 0:
                return False
        return True

    def encode(self, n: int) -> list[int]:
        """Greedy representation, most significant digit first; 0 is [0]."""
        if n < 0:
            raise QdfaoInputError(f"cannot represent a negative number: {n}")
        if n == 0:
            return [0]
        top = 0
        while self.basis(top + 1) <= n:
            top += 1
        digits = []
        for i in range(top, -1, -1):
            u = self.basis(i)
            a, n = divmod(n, u)
            digits.append(a)
        return digits

    def decode(self, digits: Sequence[int], strict: bool = True) -> int:
        if strict and not self.is_valid(digits):
            raise QdfaoRepresentationError(f"{''.join(map(str, digits))} is not a valid {self} representation")
        top = len(digits) - 1
        return sum(a * self.basis(top - idx) for idx, a in enumerate(digits))

    def __str__(self) -> str:
        if self.kind == NumerationKind.OSTROWSKI:
            return "ost:[" + ",".join(str(d) for d in self.period) + "]"
        return self.kind.value
