# qdfao/linrel/floor_div.py
from __future__ import annotations

from qdfao.linrel.relation import Relation
from qdfao.models.linear_relation import LinearRelation
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.utils.log import log_d


def floor_div_relation(
    sys: NumerationSystem,
    a: int,
    c: int,
    tapes: tuple[str, str, str] = ("u", "n", "z"),
) -> Relation:
    """
    {(u, n, z): z = floor((u + a n) / c)}, as the union over remainders r in [0, c) of
    u + a n - c z = r. With c = 1 this is the single relation u + a n - z = 0.
    """
    here = "floor_div.relation"
    if c < 1:
        raise QdfaoInputError(f"divisor must be positive, got {c}")
    u, n, z = tapes
    result: Relation | None = None
    for r in range(c):
        part = Relation.linear(LinearRelation.of(sys, {u: 1, n: a, z: -c}, r))
        result = part if result is None else result.union(part)
    log_d(here, f"a={a} c={c}", result.n_states)
    return result
