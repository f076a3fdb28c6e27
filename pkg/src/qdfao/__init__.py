from qdfao.automata.alphabet import Alphabet
from qdfao.automata.automaton_io import read_automaton, to_dot, write_automaton
from qdfao.automata.dfao import Dfa, Dfao
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import (
    QdfaoAlphabetError,
    QdfaoConstructionError,
    QdfaoError,
    QdfaoInputError,
    QdfaoOverlapError,
    QdfaoParseError,
    QdfaoRepresentationError,
    QdfaoSolverError,
    QdfaoUnsupportedError,
    QdfaoVerificationError,
)
from qdfao.models.quadratic_irrational import QuadraticIrrational
from qdfao.pipeline.digit_bundle import DigitAutomatonBundle, build_digit_dfao, eval_digit
from qdfao.pipeline.linkage import derive_beta
from qdfao.qexact.qexact import cf_expand, digit, expansion, parse_quadratic
from qdfao.satmin.ladder import LadderOutcome, search_ladder
from qdfao.satmin.solvers import make_solver

__all__ = [
    # Numbers
    "QuadraticIrrational",
    "NumerationSystem",
    "BetaLinkage",
    "parse_quadratic",
    "cf_expand",
    "digit",
    "expansion",
    "derive_beta",
    # Automata
    "Alphabet",
    "Dfa",
    "Dfao",
    "read_automaton",
    "write_automaton",
    "to_dot",
    # Digit automata
    "DigitAutomatonBundle",
    "build_digit_dfao",
    "eval_digit",
    # Minimality
    "LadderOutcome",
    "search_ladder",
    "make_solver",
    # Errors
    "QdfaoError",
    "QdfaoParseError",
    "QdfaoInputError",
    "QdfaoUnsupportedError",
    "QdfaoAlphabetError",
    "QdfaoOverlapError",
    "QdfaoRepresentationError",
    "QdfaoConstructionError",
    "QdfaoVerificationError",
    "QdfaoSolverError",
]
