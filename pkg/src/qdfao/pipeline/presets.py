# qdfao/pipeline/presets.py
from __future__ import annotations

from qdfao.models.preset_config import PresetConfig
from qdfao.models.qdfao_errors import QdfaoInputError

PHI = "(1+sqrt(5))/2"
SQRT2 = "sqrt(2)"
BRONZE = "(3+sqrt(13))/2"
SQRT3_MINUS_1_HALF = "(-1+sqrt(3))/2"
SQRT3_PLUS_1 = "1+sqrt(3)"
SQRT17_MINUS_3_QUARTER = "(-3+sqrt(17))/4"
SQRT17_PLUS_3_HALF = "(3+sqrt(17))/2"

_PRESETS: list[PresetConfig] = [
    PresetConfig(name="phi-b2", alpha=PHI, base=2, system="fib", expected_states=8, digit_set_size=54, candidates=1),
    PresetConfig(name="phi-b3", alpha=PHI, base=3, system="fib", expected_states=13, digit_set_size=197, candidates=3),
    PresetConfig(name="phi-b10", alpha=PHI, base=10, system="fib", expected_states=97),
    PresetConfig(
        name="phi-b4",
        alpha=PHI,
        base=4,
        system="fib",
        expected_states=22,
        in_default_run=False,
        description="SAT search too expensive for the default run",
    ),
    PresetConfig(name="sqrt2-b2", alpha=SQRT2, base=2, system="pell", expected_states=6, digit_set_size=29, candidates=1),
    PresetConfig(name="sqrt2-b3", alpha=SQRT2, base=3, system="pell", expected_states=14),
    PresetConfig(
        name="bronze-b2", alpha=BRONZE, base=2, system="ost:[3]", expected_states=7, digit_set_size=64, candidates=3
    ),
    PresetConfig(
        name="bronze-b3", alpha=BRONZE, base=3, system="ost:[3]", expected_states=8, digit_set_size=64, candidates=7
    ),
    PresetConfig(
        name="sqrt3m1half-b2",
        alpha=SQRT3_MINUS_1_HALF,
        base=2,
        system="ost:[2,1]",
        expected_states=12,
        digit_set_size=27,
        candidates=1,
    ),
    PresetConfig(name="sqrt3p1-b2", alpha=SQRT3_PLUS_1, base=2, system="ost:[2,1]"),
    PresetConfig(
        name="sqrt17m3quarter-b2",
        alpha=SQRT17_MINUS_3_QUARTER,
        base=2,
        system="ost:[3,1,1]",
        expected_states=16,
        digit_set_size=57,
        candidates=9,
    ),
    PresetConfig(name="sqrt17p3half-b2", alpha=SQRT17_PLUS_3_HALF, base=2, system="ost:[3,1,1]"),
]

PRESETS: dict[str, PresetConfig] = {p.name: p for p in _PRESETS}


def get_preset(name: str) -> PresetConfig:
    try:
        return PRESETS[name]
    except KeyError as e:
        raise QdfaoInputError(f"unknown preset '{name}', expected one of {', '.join(PRESETS)}") from e


def default_presets() -> list[PresetConfig]:
    return [p for p in _PRESETS if p.in_default_run]
