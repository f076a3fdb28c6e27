# qdfao/satmin/dictionary.py
"""
Digit sets: labeled samples (representation of b^n, n'th digit) for the SAT search.

File form: one `string<TAB>output` per line, `#` starts a comment line.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError, QdfaoParseError
from qdfao.qexact.qexact import expansion
from qdfao.utils.file_utils import read_text_file, write_file
from qdfao.utils.log import log_d
from qdfao.utils.str_utils import digits_to_str, str_to_digits


class Dictionary(BaseModel):
    model_config = ConfigDict(frozen=True)

    system: NumerationSystem
    base: int
    entries: tuple[tuple[tuple[int, ...], int], ...]

    @model_validator(mode="after")
    def _check_entries(self):
        for digits, _out in self.entries:
            if not self.system.is_valid(digits):
                raise ValueError(f"{digits_to_str(digits)} is not a valid {self.system} representation")
        return self

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted({out for _d, out in self.entries}))

    def __len__(self) -> int:
        return len(self.entries)

    def to_text(self) -> str:
        lines = [f"# system {self.system}", f"# base {self.base}"]
        lines += [f"{digits_to_str(d)}\t{out}" for d, out in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, system: NumerationSystem, base: int) -> Dictionary:
        entries = []
        for no, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise QdfaoParseError("expected 'string<TAB>output'", text=line, position=no)
            try:
                entries.append((tuple(str_to_digits(parts[0])), int(parts[1])))
            except ValueError as e:
                raise QdfaoParseError(str(e), text=line, position=no) from e
        return cls(system=system, base=base, entries=tuple(entries))


def build_dictionary(link: BetaLinkage, b: int, count: int) -> Dictionary:
    """The `count`'th digit set: ("0", 0) followed by ((b^n), digit n) for n < count."""
    here = "dictionary.build"
    if count < 1:
        raise QdfaoInputError(f"digit set size must be at least 1, got {count}")
    _int_part, digits = expansion(link.alpha, b, count)
    sys = link.system
    entries = [((0,), 0)]
    power = 1
    for n in range(count):
        entries.append((tuple(sys.encode(power)), digits[n]))
        power *= b
    log_d(here, f"{link.alpha} base {b}", count)
    return Dictionary(system=sys, base=b, entries=tuple(entries))


def write_dictionary(d: Dictionary, path: str) -> None:
    write_file(path, d.to_text())


def read_dictionary(path: str, system: NumerationSystem, base: int) -> Dictionary:
    return Dictionary.from_text(read_text_file(path), system, base)
