# qdfao/models/preset_config.py
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, field_validator


class PresetConfig(BaseModel):
    """
    Named construction case. Expected values are only set where known: the minimal
    state count, and for the SAT search the digit set size at which the minimal automaton
    is pinned and the number of candidates found there.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    alpha: str
    base: int
    system: str | None = None
    expected_states: int | None = None
    digit_set_size: int | None = None
    candidates: int | None = None
    in_default_run: bool = True
    description: str = ""

    @field_validator("base")
    @classmethod
    def _check_base(cls, base: int):
        if base < 2:
            raise ValueError(f"base must be at least 2, got {base}")
        return base
