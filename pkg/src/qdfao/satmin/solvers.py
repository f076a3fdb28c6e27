# qdfao/satmin/solvers.py
from __future__ import annotations

import shlex
import subprocess
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from pysat.solvers import Solver, SolverNames

from qdfao.conf.read_conf import SolverInformation
from qdfao.models.qdfao_errors import QdfaoInputError, QdfaoSolverError
from qdfao.satmin.encoding import CnfEncoding
from qdfao.utils.file_utils import make_dir, write_file
from qdfao.utils.log import log_d, log_w

SAT_EXIT = 10
UNSAT_EXIT = 20


@dataclass(frozen=True)
class SolveResult:
    satisfiable: bool
    model: tuple[int, ...] = ()

    def value(self, var: int) -> bool:
        """True when `var` is set in the model; variables absent from the model are false."""
        return 0 < var <= len(self.model) and self.model[var - 1] > 0


def blocking_clause(result: SolveResult, block_vars: list[int]) -> list[int]:
    return [-v if result.value(v) else v for v in block_vars]


def _as_result(model: list[int] | None, n_vars: int) -> SolveResult:
    if model is None:
        return SolveResult(satisfiable=False)
    dense = [0] * n_vars
    for lit in model:
        if 0 < abs(lit) <= n_vars:
            dense[abs(lit) - 1] = lit
    for i, lit in enumerate(dense):
        if lit == 0:
            dense[i] = -(i + 1)
    return SolveResult(satisfiable=True, model=tuple(dense))


class SatSolverBase(ABC):
    """One SAT back end: a verdict for an encoding, and the models that differ on `block_vars`."""

    @property
    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError("Name the back end, e.g. 'cadical153' or an executable path")

    @abstractmethod
    def solve(self, enc: CnfEncoding) -> SolveResult:
        raise NotImplementedError

    @abstractmethod
    def models(self, enc: CnfEncoding, block_vars: list[int], limit: int | None = None) -> Iterator[SolveResult]:
        raise NotImplementedError


class PysatSolver(SatSolverBase):
    def __init__(self, name: str = "cadical153"):
        known = {alias for aliases in vars(SolverNames).values() if isinstance(aliases, tuple) for alias in aliases}
        if name not in known:
            raise QdfaoInputError(f"unknown pysat solver '{name}'")
        self._name = name

    @property
    def name(self) -> str:
        return self._name

    def solve(self, enc: CnfEncoding) -> SolveResult:
        here = "pysat.solve"
        with Solver(name=self._name, bootstrap_with=enc.clauses) as s:
            sat = s.solve()
            result = _as_result(s.get_model() if sat else None, enc.n_vars)
        log_d(here, f"k={enc.k}", "SAT" if result.satisfiable else "UNSAT")
        return result

    def models(self, enc: CnfEncoding, block_vars: list[int], limit: int | None = None) -> Iterator[SolveResult]:
        here = "pysat.models"
        found = 0
        with Solver(name=self._name, bootstrap_with=enc.clauses) as s:
            while (limit is None or found < limit) and s.solve():
                result = _as_result(s.get_model(), enc.n_vars)
                found += 1
                yield result
                s.add_clause(blocking_clause(result, block_vars))
        log_d(here, f"k={enc.k}", found)


class ExternalSolver(SatSolverBase):
    """
    Runs an executable on DIMACS files kept under `work_dir`.
    Exit code 10 is SAT, 20 is UNSAT; the model is read from the `v` lines.
    """

    def __init__(self, command: str, work_dir: str = "./.qdfao", timeout: int | None = None):
        self.command = command
        self.work_dir = work_dir
        self.timeout = timeout
        self._runs = 0

    @property
    def name(self) -> str:
        return self.command

    def _instance_path(self, enc: CnfEncoding) -> str:
        self._runs += 1
        make_dir(self.work_dir)
        return str(Path(self.work_dir) / f"k{enc.k}_{enc.constraints}_{self._runs}.cnf")

    def _run(self, enc: CnfEncoding, extra: list[list[int]]) -> SolveResult:
        here = "external.run"
        path = self._instance_path(enc)
        if extra:
            enc = CnfEncoding(
                k=enc.k,
                alphabet_size=enc.alphabet_size,
                labels=enc.labels,
                constraints=enc.constraints,
                pool=enc.pool,
                clauses=enc.clauses + extra,
            )
        write_file(path, enc.to_dimacs())
        pieces = shlex.split(self.command) + [path]
        try:
            proc = subprocess.run(pieces, capture_output=True, text=True, timeout=self.timeout)
        except subprocess.TimeoutExpired as e:
            raise QdfaoSolverError.from_process(
                self.command, None, path, e.stderr, message=f"timed out after {self.timeout}s"
            ) from e
        except OSError as e:
            raise QdfaoSolverError.from_process(self.command, None, path, message=str(e)) from e
        if proc.returncode == UNSAT_EXIT:
            log_d(here, path, "UNSAT")
            return SolveResult(satisfiable=False)
        if proc.returncode != SAT_EXIT:
            raise QdfaoSolverError.from_process(self.command, proc.returncode, path, proc.stderr)
        model = parse_solver_output(proc.stdout)
        if model is None:
            raise QdfaoSolverError.from_process(
                self.command, proc.returncode, path, proc.stderr, message="SAT without a model"
            )
        log_d(here, path, "SAT")
        return _as_result(model, enc.n_vars)

    def solve(self, enc: CnfEncoding) -> SolveResult:
        return self._run(enc, [])

    def models(self, enc: CnfEncoding, block_vars: list[int], limit: int | None = None) -> Iterator[SolveResult]:
        blocks: list[list[int]] = []
        while limit is None or len(blocks) < limit:
            result = self._run(enc, blocks)
            if not result.satisfiable:
                return
            yield result
            blocks.append(blocking_clause(result, block_vars))


def parse_solver_output(stdout: str) -> list[int] | None:
    """Literals from the `v` lines of a competition-format answer, None unless `s SATISFIABLE`."""
    status = None
    model: list[int] = []
    for line in stdout.splitlines():
        if line.startswith("s "):
            status = line[2:].strip()
        elif line.startswith("v "):
            model += [int(tok) for tok in line[2:].split()]
    if status != "SATISFIABLE":
        return None
    if model and model[-1] == 0:
        model.pop()
    return model


def make_solver(info: SolverInformation, work_dir: str = "./.qdfao") -> SatSolverBase:
    here = "make_solver"
    if info.is_external:
        log_d(here, "external", info.path)
        return ExternalSolver(info.path, work_dir=work_dir, timeout=info.timeout)
    if info.timeout:
        log_w(here, "timeout is only honoured by external solvers", info.timeout)
    return PysatSolver(info.name)
