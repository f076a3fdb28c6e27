# qdfao/pipeline/__init__.py
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.pipeline.bundle_store import load_bundle, save_bundle
from qdfao.pipeline.digit_bundle import DigitAutomatonBundle, build_digit_dfao, digit_relations, eval_digit
from qdfao.pipeline.floor_alpha import (
    ProjectionOrder,
    ShiftPath,
    base_floor_relation,
    build_floor_alpha,
    chained_shift,
)
from qdfao.pipeline.linkage import GOLDEN_RATIO, derive_beta
from qdfao.pipeline.presets import PRESETS, default_presets, get_preset

__all__ = [
    "GOLDEN_RATIO",
    "PRESETS",
    "BetaLinkage",
    "DigitAutomatonBundle",
    "ProjectionOrder",
    "ShiftPath",
    "base_floor_relation",
    "build_digit_dfao",
    "build_floor_alpha",
    "chained_shift",
    "default_presets",
    "derive_beta",
    "digit_relations",
    "eval_digit",
    "get_preset",
    "load_bundle",
    "save_bundle",
]
