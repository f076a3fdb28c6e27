# qdfao/pipeline/digit_bundle.py
from __future__ import annotations

from dataclasses import dataclass, field

from qdfao.automata.algebra import combine
from qdfao.automata.dfao import Dfa, Dfao
from qdfao.linrel.relation import Relation
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.linear_relation import LinearRelation
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.numeration.validity import validity_dfa
from qdfao.pipeline.floor_alpha import ProjectionOrder, ShiftPath, build_floor_alpha
from qdfao.utils.log import log_d, log_i


@dataclass(frozen=True)
class DigitAutomatonBundle:
    """
    Digit automaton of alpha in base b: `dfao` maps the representation of b^n to the n'th
    digit after the point. `digit_dfas[i]` accepts the q whose digit value is i (i >= 1).
    """

    link: BetaLinkage
    base: int
    digit_dfas: dict[int, Dfa] = field(compare=False)
    dfao: Dfao
    floor_states: int = 0

    @property
    def system(self) -> NumerationSystem:
        return self.link.system

    @property
    def n_states(self) -> int:
        return self.dfao.n_states


def digit_relations(
    link: BetaLinkage,
    b: int,
    path: ShiftPath | str = ShiftPath.WEIGHTED,
    order: ProjectionOrder | str = ProjectionOrder.EAGER,
) -> tuple[dict[int, Relation], int]:
    """
    One-tape relations A_i = {q : floor(b q alpha) - b floor(q alpha) = i} for i in [1, b),
    and the state count of the floor relation they are built from.
    """
    here = "bundle.relations"
    sys = link.system
    eager = ProjectionOrder(order) == ProjectionOrder.EAGER
    floor = build_floor_alpha(link, path, order)

    # x = floor(b q alpha), y = floor(q alpha)
    times_b = Relation.linear(LinearRelation.of(sys, {"w": 1, "q": -b}))
    scaled = times_b.join(floor.rename({"n": "w", "z": "x"}))
    if eager:
        scaled = scaled.exists("w")
    pair = scaled.join(floor.rename({"n": "q", "z": "y"}))

    out: dict[int, Relation] = {}
    for i in range(1, b):
        digit = Relation.linear(LinearRelation.of(sys, {"x": 1, "y": -b}, i))
        hidden = ("x", "y") if eager else ("w", "x", "y")
        out[i] = pair.join(digit).exists(*hidden)
        log_d(here, f"digit {i}", out[i].n_states)
    return out, floor.n_states


def build_digit_dfao(
    link: BetaLinkage,
    b: int,
    path: ShiftPath | str = ShiftPath.WEIGHTED,
    order: ProjectionOrder | str = ProjectionOrder.EAGER,
) -> DigitAutomatonBundle:
    here = "bundle.build"
    if b < 2:
        raise QdfaoInputError(f"base must be at least 2, got {b}")
    relations, floor_states = digit_relations(link, b, path, order)
    parts = [(rel.dfa, i) for i, rel in relations.items()]
    dfao = combine(parts, default=0, domain=validity_dfa(link.system))
    log_i(here, f"{link.alpha} base {b}", f"{dfao.n_states} states")
    return DigitAutomatonBundle(
        link=link,
        base=b,
        digit_dfas={i: rel.dfa for i, rel in relations.items()},
        dfao=dfao,
        floor_states=floor_states,
    )


def eval_digit(bundle: DigitAutomatonBundle, n: int) -> int:
    """n'th digit after the point, read off the automaton on the representation of b^n."""
    if n < 0:
        raise QdfaoInputError(f"digit index must be non-negative, got {n}")
    return bundle.dfao.run(bundle.system.encode(bundle.base**n))
