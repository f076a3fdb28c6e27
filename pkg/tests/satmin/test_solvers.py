# tests/satmin/test_solvers.py
import subprocess
from pathlib import Path
from unittest.mock import patch

import pytest

from qdfao.conf.read_conf import SolverInformation
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import QdfaoInputError, QdfaoSolverError
from qdfao.satmin.apta import build_apta, build_cg
from qdfao.satmin.dictionary import Dictionary
from qdfao.satmin.encoding import encode
from qdfao.satmin.solvers import (
    ExternalSolver,
    PysatSolver,
    SolveResult,
    blocking_clause,
    make_solver,
    parse_solver_output,
)

RUN = "qdfao.satmin.solvers.subprocess.run"


@pytest.fixture
def small_enc():
    d = Dictionary(system=NumerationSystem.fibonacci(), base=2, entries=(((0,), 0), ((1,), 1)))
    apta = build_apta(d)
    return encode(apta, build_cg(apta), 2, d.system)


def answer(returncode, stdout="", stderr=""):
    return subprocess.CompletedProcess(args=[], returncode=returncode, stdout=stdout, stderr=stderr)


class TestSolveResult:
    def test_value(self):
        r = SolveResult(satisfiable=True, model=(1, -2, 3))
        assert r.value(1)
        assert not r.value(2)
        assert not r.value(4)
        assert not r.value(0)

    def test_blocking_clause(self):
        r = SolveResult(satisfiable=True, model=(1, -2, 3))
        assert blocking_clause(r, [1, 2]) == [-1, 2]


class TestParseSolverOutput:
    def test_sat(self):
        out = "c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n"
        assert parse_solver_output(out) == [1, -2, 3, -4]

    def test_unsat(self):
        assert parse_solver_output("s UNSATISFIABLE\n") is None

    def test_no_status(self):
        assert parse_solver_output("v 1 2 0\n") is None


class TestPysatSolver:
    def test_unknown_name(self):
        with pytest.raises(QdfaoInputError):
            PysatSolver("not-a-solver")

    @pytest.mark.parametrize("name", ["cadical153", "glucose4", "minisat22"])
    def test_solves(self, small_enc, name):
        result = PysatSolver(name).solve(small_enc)
        assert result.satisfiable
        assert len(result.model) == small_enc.n_vars

    def test_models_respect_limit(self, small_enc):
        solver = PysatSolver()
        every = list(solver.models(small_enc, small_enc.block_vars()))
        assert len(list(solver.models(small_enc, small_enc.block_vars(), limit=1))) == 1
        assert len(every) >= 1
        block = small_enc.block_vars()
        assert len({tuple(r.value(v) for v in block) for r in every}) == len(every)


class TestExternalSolver:
    def test_sat(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat -q", work_dir=str(tmp_path))
        with patch(RUN, return_value=answer(10, "s SATISFIABLE\nv 1 -2 0\n")) as run:
            result = solver.solve(small_enc)
        assert result.satisfiable
        assert result.value(1)
        assert not result.value(2)
        assert len(result.model) == small_enc.n_vars
        args = run.call_args.args[0]
        assert args[:2] == ["kissat", "-q"]
        assert Path(args[2]).parent == tmp_path
        assert Path(args[2]).read_text().startswith("c qdfao k=2")

    def test_unsat(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat", work_dir=str(tmp_path))
        with patch(RUN, return_value=answer(20, "s UNSATISFIABLE\n")):
            assert not solver.solve(small_enc).satisfiable

    def test_failure(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat", work_dir=str(tmp_path))
        with patch(RUN, return_value=answer(1, stderr="boom")):
            with pytest.raises(QdfaoSolverError) as err:
                solver.solve(small_enc)
        assert err.value.model.returncode == 1
        assert err.value.model.stderr == "boom"
        assert err.value.model.solver == "kissat"

    def test_sat_without_model(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat", work_dir=str(tmp_path))
        with patch(RUN, return_value=answer(10, "s UNKNOWN\n")):
            with pytest.raises(QdfaoSolverError):
                solver.solve(small_enc)

    def test_timeout(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat", work_dir=str(tmp_path), timeout=5)
        with patch(RUN, side_effect=subprocess.TimeoutExpired(cmd="kissat", timeout=5)):
            with pytest.raises(QdfaoSolverError) as err:
                solver.solve(small_enc)
        assert err.value.model.returncode is None

    def test_missing_executable(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat", work_dir=str(tmp_path))
        with patch(RUN, side_effect=FileNotFoundError("kissat")):
            with pytest.raises(QdfaoSolverError):
                solver.solve(small_enc)

    def test_models_add_blocking_clauses(self, small_enc, tmp_path):
        solver = ExternalSolver("kissat", work_dir=str(tmp_path))
        answers = [answer(10, "s SATISFIABLE\nv 1 -2 0\n"), answer(20)]
        with patch(RUN, side_effect=answers) as run:
            found = list(solver.models(small_enc, [1, 2]))
        assert len(found) == 1
        second = Path(run.call_args_list[1].args[0][-1]).read_text().splitlines()
        assert second[-1] == "-1 2 0"
        assert len(list(tmp_path.iterdir())) == 2


class TestMakeSolver:
    def test_in_process(self):
        solver = make_solver(SolverInformation(name="glucose4"))
        assert isinstance(solver, PysatSolver)
        assert solver.name == "glucose4"

    def test_external(self, tmp_path):
        solver = make_solver(SolverInformation(name="cadical153", path="/opt/kissat", timeout=30), str(tmp_path))
        assert isinstance(solver, ExternalSolver)
        assert solver.name == "/opt/kissat"
        assert solver.timeout == 30
