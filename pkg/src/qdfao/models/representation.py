# qdfao/models/representation.py
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, field_validator

from qdfao.models.qdfao_errors import QdfaoParseError
from qdfao.utils.str_utils import digits_to_str, str_to_digits


class Representation(BaseModel):
    """Digit string, most significant first. Zero is the single digit 0."""

    model_config = ConfigDict(frozen=True)

    digits: tuple[int, ...]

    @field_validator("digits")
    @classmethod
    def _check_digits(cls, digits: tuple[int, ...]):
        if not digits:
            raise ValueError("a representation has at least one digit")
        if any(d < 0 for d in digits):
            raise ValueError(f"digits must be non-negative, got {digits}")
        if len(digits) > 1 and digits[0] == 0:
            raise ValueError(f"leading zero in {digits}")
        return digits

    @classmethod
    def parse(cls, text: str) -> Representation:
        try:
            digits = str_to_digits(text)
        except ValueError as e:
            raise QdfaoParseError(str(e), text=text) from e
        while len(digits) > 1 and digits[0] == 0:
            digits.pop(0)
        if not digits:
            raise QdfaoParseError("empty digit string", text=text)
        return cls(digits=tuple(digits))

    def padded(self, width: int) -> list[int]:
        return [0] * (width - len(self.digits)) + list(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return digits_to_str(self.digits)
