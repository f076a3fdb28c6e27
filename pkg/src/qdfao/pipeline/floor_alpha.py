# qdfao/pipeline/floor_alpha.py
"""
Synchronized (n, floor(n alpha)) relations.

The base relation gives floor(n beta) from the representation of n - 1:

    Zeckendorf:  floor(n phi) = val((n-1)0) + 1
    otherwise:   val((n-1)0^m) = q_m (n-1) + q_{m-1} floor(n beta)

and alpha = (a + b beta)/c gives floor(n alpha) = floor((a n + floor(b n beta)) / c).
"""

from __future__ import annotations

from enum import StrEnum

from qdfao.linrel.floor_div import floor_div_relation
from qdfao.linrel.relation import Relation
from qdfao.linrel.shift import string_shift_dfa
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.linear_relation import LinearRelation, RelationTerm
from qdfao.models.numeration_system import NumerationSystem
from qdfao.utils.log import log_d


class ShiftPath(StrEnum):
    WEIGHTED = "weighted"
    CHAINED = "chained"


class ProjectionOrder(StrEnum):
    EAGER = "eager"
    DEFERRED = "deferred"


def _shift_count(link: BetaLinkage) -> int:
    return 1 if link.system.is_fibonacci else link.m


def _base_equation(link: BetaLinkage, chained: bool) -> LinearRelation:
    """Over (z, u) with the shift folded into the u term, or over (z, u, v) where v is the shifted u."""
    if link.system.is_fibonacci:
        # z - val(u0) = 1
        fixed = {"z": 1}
        constant = 1
    else:
        # q_{m-1} z + q_m u - val(u0^m) = 0
        fixed = {"z": link.q_m_minus_1, "u": link.q_m}
        constant = 0
    tapes = ("z", "u", "v") if chained else ("z", "u")
    terms = [RelationTerm(tape=tapes.index(name), coefficient=c) for name, c in fixed.items()]
    if chained:
        terms.append(RelationTerm(tape=2, coefficient=-1))
    else:
        terms.append(RelationTerm(tape=1, coefficient=-1, shift=_shift_count(link)))
    return LinearRelation(system=link.system, tapes=tapes, terms=tuple(terms), constant=constant)


def chained_shift(sys: NumerationSystem, times: int, src: str = "u", dst: str = "v") -> Relation:
    """(src, dst) with dst = src followed by `times` zeros, composed one digit at a time."""
    step = string_shift_dfa(sys)
    rel = Relation(step, (src, "s1" if times > 1 else dst), sys)
    for i in range(1, times):
        nxt = Relation(step, (f"s{i}", f"s{i + 1}" if i + 1 < times else dst), sys)
        rel = rel.join(nxt).exists(f"s{i}")
    return rel.reorder((src, dst))


def base_floor_relation(link: BetaLinkage, path: ShiftPath | str = ShiftPath.WEIGHTED) -> Relation:
    """(n, z) with z = floor(n beta), or z = floor(n phi) in the Zeckendorf case."""
    here = "floor.base"
    sys = link.system
    if ShiftPath(path) == ShiftPath.WEIGHTED:
        equation = Relation.linear(_base_equation(link, chained=False))
    else:
        equation = Relation.linear(_base_equation(link, chained=True))
        equation = equation.join(chained_shift(sys, _shift_count(link))).exists("v")
    previous = Relation.linear(LinearRelation.of(sys, {"n": 1, "u": -1}, 1))
    rel = previous.join(equation).exists("u")
    rel = rel.union(Relation.zero(sys, rel.tapes)).reorder(("n", "z"))
    log_d(here, str(sys), rel.n_states)
    return rel


def build_floor_alpha(
    link: BetaLinkage,
    path: ShiftPath | str = ShiftPath.WEIGHTED,
    order: ProjectionOrder | str = ProjectionOrder.EAGER,
) -> Relation:
    """(n, z) with z = floor(n alpha)."""
    here = "floor.alpha"
    sys = link.system
    eager = ProjectionOrder(order) == ProjectionOrder.EAGER
    base = base_floor_relation(link, path)
    if (link.a, link.b, link.c) == (0, 1, 1):
        return base

    hidden: list[str] = []
    if link.b == 1:
        inner = base.rename({"z": "u"})
    else:
        inner = Relation.linear(LinearRelation.of(sys, {"w": 1, "n": -link.b})).join(
            base.rename({"n": "w", "z": "u"})
        )
        if eager:
            inner = inner.exists("w")
        else:
            hidden.append("w")
    rel = inner.join(floor_div_relation(sys, link.a, link.c, ("u", "n", "z")))
    rel = rel.exists("u", *hidden).reorder(("n", "z"))
    log_d(here, str(link.alpha), rel.n_states)
    return rel
