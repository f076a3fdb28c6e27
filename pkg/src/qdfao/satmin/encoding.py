# qdfao/satmin/encoding.py
"""
CNF encoding of "is there a k-state DFAO consistent with the APTA".

Variables (keys of the IDPool):
    ("x", v, i)     APTA node v gets color i
    ("y", l, p, q)  color p moves to color q on digit l
    ("o", i, s)     color i outputs s
    ("b", p, t)     color p sits on state t of the validity DFA
    ("t", i, j), ("p", j, i), ("m", l, i, j)   breadth-first numbering helpers
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

from pysat.card import CardEnc, EncType
from pysat.formula import CNF, IDPool

from qdfao.automata.dfao import Dfa
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.numeration.validity import validity_dfa
from qdfao.satmin.apta import Apta, ConsistencyGraph
from qdfao.utils.file_utils import read_text_file, write_file
from qdfao.utils.log import log_d


class ConstraintSet(StrEnum):
    METALLIC = "metallic"
    BASE = "base"
    NONE = "none"

    @classmethod
    def for_system(cls, sys: NumerationSystem) -> ConstraintSet:
        return cls.METALLIC if sys.phase_count == 1 else cls.BASE


class Granularity(StrEnum):
    """Which variables tell two enumerated candidates apart."""

    TRANSITIONS = "transitions"
    WITH_BASE = "with-base"


@dataclass
class CnfEncoding:
    k: int
    alphabet_size: int
    labels: tuple[int, ...]
    constraints: ConstraintSet
    pool: IDPool = field(default_factory=IDPool)
    clauses: list[list[int]] = field(default_factory=list)

    def var(self, *key) -> int:
        return self.pool.id(key)

    def known(self, *key) -> int | None:
        return self.pool.obj2id.get(key)

    def add(self, clause: list[int]) -> None:
        self.clauses.append(clause)

    def at_most_one(self, lits: list[int]) -> None:
        if len(lits) > 1:
            self.clauses.extend(CardEnc.atmost(lits=lits, bound=1, encoding=EncType.pairwise).clauses)

    @property
    def n_vars(self) -> int:
        return max((abs(lit) for cl in self.clauses for lit in cl), default=0)

    def block_vars(self, granularity: Granularity | str = Granularity.TRANSITIONS) -> list[int]:
        kinds = {"y", "o"} if Granularity(granularity) == Granularity.TRANSITIONS else {"y", "o", "b"}
        return sorted(v for key, v in self.pool.obj2id.items() if key[0] in kinds)

    def catalog(self) -> list[str]:
        """`c <kind> <indices> <var>` lines for the decision variables."""
        lines = []
        for key, v in sorted(self.pool.obj2id.items(), key=lambda e: e[1]):
            if key[0] in ("x", "y", "o", "b"):
                lines.append("c " + " ".join(str(part) for part in key) + f" {v}")
        return lines

    def to_cnf(self) -> CNF:
        return CNF(from_clauses=[list(cl) for cl in self.clauses])

    def to_dimacs(self) -> str:
        cnf = self.to_cnf()
        lines = [f"c qdfao k={self.k} constraints={self.constraints}"] + self.catalog()
        lines.append(f"p cnf {cnf.nv} {len(cnf.clauses)}")
        lines += [" ".join(str(lit) for lit in cl) + " 0" for cl in cnf.clauses]
        return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------------------------------
# Clause families
# --------------------------------------------------------------------------------------------------
def _coloring(enc: CnfEncoding, apta: Apta, cg: ConsistencyGraph) -> None:
    k = enc.k
    for v in range(apta.n_nodes):
        lits = [enc.var("x", v, i) for i in range(k)]
        enc.add(lits)
        enc.at_most_one(lits)
    enc.add([enc.var("x", 0, 0)])
    for u, v in cg.edges:
        for i in range(k):
            enc.add([-enc.var("x", u, i), -enc.var("x", v, i)])


def _outputs(enc: CnfEncoding, apta: Apta) -> None:
    k = enc.k
    for i in range(k):
        enc.at_most_one([enc.var("o", i, s) for s in enc.labels])
    holders: dict[int, list[int]] = {s: [] for s in enc.labels}
    for v in apta.labeled():
        holders[apta.output[v]].append(v)
        for i in range(k):
            enc.add([-enc.var("x", v, i), enc.var("o", i, apta.output[v])])
    # an output is only set on a color that carries a vertex with that output
    for i in range(k):
        for s, vs in holders.items():
            enc.add([-enc.var("o", i, s)] + [enc.var("x", v, i) for v in vs])


def _transitions(enc: CnfEncoding, apta: Apta) -> None:
    k, size = enc.k, enc.alphabet_size
    for v in range(1, apta.n_nodes):
        p, a = apta.parent[v], apta.label[v]
        for i in range(k):
            for j in range(k):
                x_p, x_v, y = enc.var("x", p, i), enc.var("x", v, j), enc.var("y", a, i, j)
                enc.add([-x_p, -x_v, y])
                enc.add([-y, -x_p, x_v])
    for a in range(size):
        for i in range(k):
            enc.at_most_one([enc.var("y", a, i, j) for j in range(k)])
    enc.add([enc.var("y", 0, 0, 0)])


def _completeness(enc: CnfEncoding, sys: NumerationSystem) -> None:
    k, size = enc.k, enc.alphabet_size
    match enc.constraints:
        case ConstraintSet.NONE:
            for a in range(size):
                for i in range(k):
                    enc.add([enc.var("y", a, i, j) for j in range(k)])
        case ConstraintSet.METALLIC:
            d1 = sys.period[0]
            for i in range(k):
                enc.add([enc.var("y", 0, i, j) for j in range(k)])
                enc.add([-enc.var("y", d1, i, i)])
                for j in range(k):
                    for a in range(1, d1 + 1):
                        for t in range(k):
                            enc.add([-enc.var("y", d1, i, j), -enc.var("y", a, j, t)])
                # labels 1..d1 are required unless the color is entered on d1
                entered = [enc.var("y", d1, h, i) for h in range(k)]
                for a in range(1, d1 + 1):
                    enc.add([enc.var("y", a, i, j) for j in range(k)] + entered)
        case ConstraintSet.BASE:
            _base_states(enc, validity_dfa(sys))


def _base_states(enc: CnfEncoding, base: Dfa) -> None:
    k, size = enc.k, enc.alphabet_size
    n_base = base.n_states
    enc.add([enc.var("b", 0, base.start)])
    for p in range(k):
        lits = [enc.var("b", p, t) for t in range(n_base)]
        enc.add(lits)
        enc.at_most_one(lits)
    for i in range(k):
        for j in range(k):
            for s in range(n_base):
                for t in range(n_base):
                    for a in range(size):
                        if base.delta[s].get(a) != t:
                            enc.add([-enc.var("b", i, s), -enc.var("b", j, t), -enc.var("y", a, i, j)])
    for i in range(k):
        for s in range(n_base):
            for a in base.delta[s]:
                enc.add([-enc.var("b", i, s)] + [enc.var("y", a, i, j) for j in range(k)])


def _symmetry_breaking(enc: CnfEncoding) -> None:
    """Colors are numbered in breadth-first order of first discovery, edges in digit order."""
    k, size = enc.k, enc.alphabet_size
    for i in range(k):
        for j in range(i + 1, k):
            t = enc.var("t", i, j)
            ys = [enc.var("y", a, i, j) for a in range(size)]
            enc.add([-t] + ys)
            for y in ys:
                enc.add([-y, t])
    for j in range(1, k):
        enc.add([enc.var("p", j, i) for i in range(j)])
        for i in range(j):
            p = enc.var("p", j, i)
            earlier = [enc.var("t", r, j) for r in range(i)]
            enc.add([-p, enc.var("t", i, j)])
            for tr in earlier:
                enc.add([-p, -tr])
            enc.add([p, -enc.var("t", i, j)] + earlier)
    for j in range(1, k - 1):
        for i in range(j):
            for r in range(i):
                enc.add([-enc.var("p", j, i), -enc.var("p", j + 1, r)])
    if size == 2:
        for j in range(1, k - 1):
            for i in range(j):
                enc.add([-enc.var("p", j, i), -enc.var("p", j + 1, i), enc.var("y", 0, i, j)])
        return
    for i in range(k):
        for j in range(i + 1, k):
            for a in range(size):
                m = enc.var("m", a, i, j)
                y = enc.var("y", a, i, j)
                lower = [enc.var("y", c, i, j) for c in range(a)]
                enc.add([-m, y])
                for yl in lower:
                    enc.add([-m, -yl])
                enc.add([m, -y] + lower)
    for j in range(1, k - 1):
        for i in range(j):
            for a in range(size):
                for c in range(a):
                    enc.add(
                        [
                            -enc.var("p", j, i),
                            -enc.var("p", j + 1, i),
                            -enc.var("m", a, i, j),
                            -enc.var("m", c, i, j + 1),
                        ]
                    )


def encode(
    apta: Apta,
    cg: ConsistencyGraph,
    k: int,
    sys: NumerationSystem,
    constraints: ConstraintSet | str | None = None,
    symmetry_breaking: bool = True,
    labels: tuple[int, ...] | None = None,
) -> CnfEncoding:
    here = "encoding.encode"
    if k < 1:
        raise QdfaoInputError(f"k must be at least 1, got {k}")
    if apta.alphabet_size != sys.max_digit + 1:
        raise QdfaoInputError("APTA alphabet does not match the numeration system")
    constraints = ConstraintSet.for_system(sys) if constraints is None else ConstraintSet(constraints)
    if constraints == ConstraintSet.METALLIC and sys.phase_count != 1:
        raise QdfaoInputError(f"metallic constraints need a one-term period, {sys} has {sys.phase_count}")
    if labels is None:
        labels = tuple(sorted({o for o in apta.output if o is not None}))
    enc = CnfEncoding(k=k, alphabet_size=apta.alphabet_size, labels=labels, constraints=constraints)

    # decision variables first, so their numbering does not depend on the clause families
    for v in range(apta.n_nodes):
        for i in range(k):
            enc.var("x", v, i)
    for a in range(enc.alphabet_size):
        for i in range(k):
            for j in range(k):
                enc.var("y", a, i, j)
    for i in range(k):
        for s in labels:
            enc.var("o", i, s)

    _coloring(enc, apta, cg)
    _outputs(enc, apta)
    _transitions(enc, apta)
    _completeness(enc, sys)
    if symmetry_breaking and k > 1:
        _symmetry_breaking(enc)
    log_d(here, f"k={k} {constraints}", f"{enc.n_vars} vars, {len(enc.clauses)} clauses")
    return enc


def write_dimacs(enc: CnfEncoding, path: str) -> None:
    write_file(path, enc.to_dimacs())


def read_dimacs(path: str) -> tuple[CNF, dict[tuple, int]]:
    """The formula and the variable map recorded in its `c <kind> <indices> <var>` header."""
    cnf = CNF(from_string=read_text_file(path))
    catalog: dict[tuple, int] = {}
    for line in cnf.comments:
        parts = line.split()
        if len(parts) >= 4 and parts[1] in ("x", "y", "o", "b"):
            catalog[(parts[1], *(int(p) for p in parts[2:-1]))] = int(parts[-1])
    return cnf, catalog
