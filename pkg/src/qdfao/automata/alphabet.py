# qdfao/automata/alphabet.py
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from qdfao.models.qdfao_errors import QdfaoAlphabetError, QdfaoParseError


@lru_cache(maxsize=256)
def _columns(ranges: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    cols: list[tuple[int, ...]] = [()]
    for r in ranges:
        cols = [c + (v,) for c in cols for v in range(r)]
    return tuple(cols)


@dataclass(frozen=True)
class Alphabet:
    """
    Digit range per tape. k synchronized tapes are read as one symbol space of size
    prod(ranges); the first tape is the most significant in the symbol index, and the
    all-zero column is symbol 0.
    """

    ranges: tuple[int, ...]

    def __post_init__(self):
        if not self.ranges:
            raise QdfaoAlphabetError("an alphabet needs at least one tape")
        if any(r < 1 for r in self.ranges):
            raise QdfaoAlphabetError(f"tape ranges must be positive, got {self.ranges}")

    @classmethod
    def tapes(cls, k: int, size: int) -> Alphabet:
        return cls(tuple([size] * k))

    @classmethod
    def parse(cls, text: str) -> Alphabet:
        try:
            return cls(tuple(int(part) for part in text.strip().split("x")))
        except ValueError as e:
            raise QdfaoParseError("bad alphabet descriptor", text=text) from e

    @property
    def arity(self) -> int:
        return len(self.ranges)

    @property
    def size(self) -> int:
        return prod(self.ranges)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return _columns(self.ranges)

    def symbols(self) -> range:
        return range(self.size)

    def encode(self, column: Sequence[int] | int) -> int:
        if isinstance(column, int):
            if self.arity != 1:
                raise QdfaoAlphabetError(f"expected a {self.arity}-tuple, got {column}")
            column = (column,)
        if len(column) != self.arity:
            raise QdfaoAlphabetError(f"expected a {self.arity}-tuple, got {tuple(column)}")
        sym = 0
        for v, r in zip(column, self.ranges, strict=True):
            if not 0 <= v < r:
                raise QdfaoAlphabetError(f"digit {v} outside [0, {r}) in column {tuple(column)}")
            sym = sym * r + v
        return sym

    def decode(self, symbol: int) -> tuple[int, ...]:
        if not 0 <= symbol < self.size:
            raise QdfaoAlphabetError(f"symbol {symbol} outside alphabet {self.describe()}")
        return self.columns[symbol]

    def drop(self, tape: int) -> Alphabet:
        if not 0 <= tape < self.arity:
            raise QdfaoAlphabetError(f"no tape {tape} in alphabet {self.describe()}")
        return Alphabet(self.ranges[:tape] + self.ranges[tape + 1 :])

    def select(self, tapes: Sequence[int]) -> Alphabet:
        return Alphabet(tuple(self.ranges[t] for t in tapes))

    def describe(self) -> str:
        return "x".join(str(r) for r in self.ranges)

    def format_symbol(self, symbol: int) -> str:
        return ",".join(str(v) for v in self.decode(symbol))

    def parse_symbol(self, text: str) -> int:
        try:
            column = tuple(int(v) for v in text.strip().strip("[]()").split(","))
        except ValueError as e:
            raise QdfaoParseError("bad symbol", text=text) from e
        return self.encode(column)

    def word(self, *tapes: Sequence[int]) -> list[int]:
        """Zips equal-length digit strings (one per tape) into a symbol word, padding on the left."""
        if len(tapes) != self.arity:
            raise QdfaoAlphabetError(f"expected {self.arity} tapes, got {len(tapes)}")
        width = max((len(t) for t in tapes), default=0)
        padded = [[0] * (width - len(t)) + list(t) for t in tapes]
        return [self.encode(col) for col in zip(*padded, strict=True)]
