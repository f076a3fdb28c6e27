# qdfao/satmin/apta.py
from __future__ import annotations

from dataclasses import dataclass, field

from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.satmin.dictionary import Dictionary
from qdfao.utils.log import log_d


@dataclass
class Apta:
    """Prefix tree of the dictionary strings; node 0 is the empty word."""

    alphabet_size: int
    parent: list[int] = field(default_factory=lambda: [-1])
    label: list[int] = field(default_factory=lambda: [-1])
    children: list[dict[int, int]] = field(default_factory=lambda: [{}])
    output: list[int | None] = field(default_factory=lambda: [None])

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    def add(self, digits: tuple[int, ...], out: int) -> int:
        v = 0
        for a in digits:
            if not 0 <= a < self.alphabet_size:
                raise QdfaoInputError(f"digit {a} outside the alphabet of size {self.alphabet_size}")
            nxt = self.children[v].get(a)
            if nxt is None:
                nxt = self.n_nodes
                self.parent.append(v)
                self.label.append(a)
                self.children.append({})
                self.output.append(None)
                self.children[v][a] = nxt
            v = nxt
        if self.output[v] is not None and self.output[v] != out:
            raise QdfaoInputError(f"conflicting outputs {self.output[v]} and {out} for one string")
        self.output[v] = out
        return v

    def labeled(self) -> list[int]:
        return [v for v in range(self.n_nodes) if self.output[v] is not None]


@dataclass
class ConsistencyGraph:
    """Direct conflicts only: nodes with defined, different outputs."""

    edges: list[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)


def build_apta(d: Dictionary) -> Apta:
    here = "apta.build"
    apta = Apta(alphabet_size=d.system.max_digit + 1)
    for digits, out in d.entries:
        apta.add(digits, out)
    log_d(here, "nodes", apta.n_nodes)
    return apta


def build_cg(apta: Apta) -> ConsistencyGraph:
    by_output: dict[int, list[int]] = {}
    for v in apta.labeled():
        by_output.setdefault(apta.output[v], []).append(v)
    groups = sorted(by_output.items())
    edges = []
    for gi, (_s, us) in enumerate(groups):
        for _t, vs in groups[gi + 1 :]:
            edges.extend((min(u, v), max(u, v)) for u in us for v in vs)
    edges.sort()
    return ConsistencyGraph(edges=edges)
