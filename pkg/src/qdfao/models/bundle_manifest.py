# qdfao/models/bundle_manifest.py
from __future__ import annotations

from pydantic import BaseModel, ConfigDict


class BundleManifest(BaseModel):
    """Sidecar of a saved digit automaton. `build_hash` is the SHA-256 of the automaton text."""

    model_config = ConfigDict(frozen=True)

    system: str
    alpha: str
    base: int
    states: int
    build_hash: str
    preset: str | None = None

    def to_json(self) -> dict:
        return self.model_dump()

    @classmethod
    def from_json(cls, d: dict) -> BundleManifest:
        return cls.model_validate(d)
