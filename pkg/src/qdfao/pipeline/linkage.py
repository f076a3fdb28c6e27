# qdfao/pipeline/linkage.py
from __future__ import annotations

from math import lcm

from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError, QdfaoUnsupportedError
from qdfao.models.quadratic_irrational import QuadraticIrrational
from qdfao.qexact.qexact import cf_expand, from_periodic_tail
from qdfao.utils.log import log_d

GOLDEN_RATIO = QuadraticIrrational(a=1, b=1, d=5, c=2)


def _linear_coefficients(alpha: QuadraticIrrational, beta: QuadraticIrrational) -> tuple[int, int, int]:
    """Integers (a, b, c), c >= 1 and lowest terms, with alpha = (a + b beta) / c."""
    if alpha.d != beta.d:
        raise QdfaoUnsupportedError(f"{alpha} and {beta} lie in different quadratic fields")
    s = alpha.surd_part / beta.surd_part
    r = alpha.rational_part - s * beta.rational_part
    c = lcm(s.denominator, r.denominator)
    return int(r * c), int(s * c), c


def derive_beta(alpha: QuadraticIrrational) -> BetaLinkage:
    """
    Finds the numeration system for alpha: beta = [0; d_j, d_j+1, ...] for the first j with
    d_j > 1, so that alpha = (a + b beta)/c. An all-ones period gives the Zeckendorf system
    with beta the golden ratio.
    """
    here = "linkage.derive_beta"
    if alpha.sign() <= 0:
        raise QdfaoInputError(f"alpha must be positive, got {alpha}")
    cf = cf_expand(alpha)
    if not cf.is_purely_periodic_tail:
        raise QdfaoUnsupportedError(f"{alpha} = {cf} has a preperiod beyond d0; no construction is known")
    period = cf.period
    if all(d == 1 for d in period):
        a, b, c = _linear_coefficients(alpha, GOLDEN_RATIO)
        link = BetaLinkage(alpha=alpha, beta=GOLDEN_RATIO, system=NumerationSystem.fibonacci(), a=a, b=b, c=c)
        log_d(here, str(alpha), "fib", (a, b, c))
        return link

    j = next(i for i in range(1, len(period) + 1) if period[i - 1] > 1)
    rotated = period[j - 1 :] + period[: j - 1]
    beta = from_periodic_tail(alpha, j)
    system = NumerationSystem.pell() if rotated == (2,) else NumerationSystem.ostrowski(rotated)
    a, b, c = _linear_coefficients(alpha, beta)
    if b < 1:
        raise QdfaoUnsupportedError(f"{alpha} is a decreasing function of {beta}")
    m = len(rotated)
    link = BetaLinkage(
        alpha=alpha,
        beta=beta,
        system=system,
        a=a,
        b=b,
        c=c,
        q_m=system.basis(m),
        q_m_minus_1=system.basis(m - 1),
    )
    log_d(here, str(alpha), str(system), (a, b, c))
    return link

