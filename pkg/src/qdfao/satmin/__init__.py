from qdfao.satmin.apta import Apta, ConsistencyGraph, build_apta, build_cg
from qdfao.satmin.decode import base_mapping, consistent_with, decode_model, enumerate_all, verify_candidate
from qdfao.satmin.dictionary import Dictionary, build_dictionary, read_dictionary, write_dictionary
from qdfao.satmin.encoding import CnfEncoding, ConstraintSet, Granularity, encode, read_dimacs, write_dimacs
from qdfao.satmin.ladder import LadderOutcome, search_ladder
from qdfao.satmin.solvers import ExternalSolver, PysatSolver, SatSolverBase, SolveResult, make_solver

__all__ = [
    "Apta",
    "CnfEncoding",
    "ConsistencyGraph",
    "ConstraintSet",
    "Dictionary",
    "ExternalSolver",
    "Granularity",
    "LadderOutcome",
    "PysatSolver",
    "SatSolverBase",
    "SolveResult",
    "base_mapping",
    "build_apta",
    "build_cg",
    "build_dictionary",
    "consistent_with",
    "decode_model",
    "encode",
    "enumerate_all",
    "make_solver",
    "read_dimacs",
    "read_dictionary",
    "search_ladder",
    "verify_candidate",
    "write_dictionary",
    "write_dimacs",
]
