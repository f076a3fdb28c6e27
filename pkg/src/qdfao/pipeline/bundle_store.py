# qdfao/pipeline/bundle_store.py
from __future__ import annotations

from pathlib import Path

from qdfao.automata.automaton_io import read_automaton, write_automaton
from qdfao.automata.dfao import Dfao
from qdfao.models.bundle_manifest import BundleManifest
from qdfao.pipeline.digit_bundle import DigitAutomatonBundle
from qdfao.utils.file_utils import (
    check_is_file,
    is_file,
    read_json_file,
    read_text_file,
    text_hash,
    write_file,
    write_json_file,
)
from qdfao.utils.log import log_d


def manifest_path(automaton_path: str) -> str:
    return str(Path(automaton_path).with_suffix(".json"))


def save_bundle(bundle: DigitAutomatonBundle, path: str, preset: str | None = None) -> BundleManifest:
    """Writes the digit automaton to `path` and its manifest next to it (same name, .json)."""
    here = "store.save"
    text = write_automaton(bundle.dfao)
    manifest = BundleManifest(
        system=str(bundle.system),
        alpha=str(bundle.link.alpha),
        base=bundle.base,
        states=bundle.n_states,
        build_hash=text_hash(text),
        preset=preset,
    )
    write_file(path, text)
    write_json_file(manifest_path(path), manifest.to_json())
    log_d(here, path, manifest.states)
    return manifest


def load_bundle(path: str) -> tuple[Dfao, BundleManifest | None]:
    """Reads an automaton file and, when present, its manifest."""
    check_is_file(path)
    dfao = read_automaton(read_text_file(path))
    side = manifest_path(path)
    if not is_file(side):
        return dfao, None
    return dfao, BundleManifest.from_json(read_json_file(side))
