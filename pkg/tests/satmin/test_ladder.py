# tests/satmin/test_ladder.py
import pytest

from qdfao.automata.equivalence import equivalent
from qdfao.models.ledger_row import CellStatus, LedgerRow
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.numeration.validity import validity_dfa
from qdfao.pipeline.digit_bundle import build_digit_dfao
from qdfao.pipeline.linkage import derive_beta
from qdfao.pipeline.presets import get_preset
from qdfao.qexact.qexact import parse_quadratic
from qdfao.satmin.apta import build_apta, build_cg
from qdfao.satmin.decode import enumerate_all, verify_candidate
from qdfao.satmin.dictionary import build_dictionary
from qdfao.satmin.encoding import encode
from qdfao.satmin.ladder import search_ladder
from qdfao.satmin.solvers import PysatSolver


@pytest.fixture(scope="module")
def phi_link():
    return derive_beta(parse_quadratic("(1+sqrt(5))/2"))


class TestLadder:
    def test_gives_up_at_state_cap(self, phi_link):
        out = search_ladder(phi_link, 2, PysatSolver(), digit_set=3, max_states=3)
        assert not out.found
        assert [(r.states, r.status) for r in out.rows] == [(k, CellStatus.UNSAT) for k in (1, 2, 3)]
        assert out.to_table().splitlines()[0] == LedgerRow.header()

    def test_grows_digit_set_after_failed_check(self, phi_link):
        out = search_ladder(phi_link, 2, PysatSolver(), k_start=4, digit_set=3, max_states=4, max_digit_set=4)
        first = out.rows[0]
        assert (first.states, first.digit_set, first.status) == (4, 3, CellStatus.SAT)
        assert first.verified is False
        assert first.failing_index is not None
        assert out.rows[1].digit_set == 4

    @pytest.mark.parametrize("kwargs", [{"k_start": 0}, {"digit_set": 0}, {"step": 0}])
    def test_arguments_checked(self, phi_link, kwargs):
        with pytest.raises(QdfaoInputError):
            search_ladder(phi_link, 2, PysatSolver(), **kwargs)


@pytest.mark.slow
class TestLadderMinimality:
    def test_phi_base2(self, phi_link):
        out = search_ladder(phi_link, 2, PysatSolver(), k_start=6, digit_set=54, n_max=2000)
        assert out.found
        assert out.states == 8
        assert len(out.candidates) == 1
        assert all(out.verified)
        assert (7, CellStatus.UNSAT) in [(r.states, r.status) for r in out.rows]
        assert out.rows[-1].candidates == 1


class TestLadderMonotonicity:
    def test_small_phi_grid(self, phi_link):
        ks, sets = range(1, 6), range(1, 5)
        sat = {}
        for ds in sets:
            d = build_dictionary(phi_link, 2, ds)
            apta = build_apta(d)
            cg = build_cg(apta)
            for k in ks:
                sat[k, ds] = PysatSolver().solve(encode(apta, cg, k, d.system, labels=(0, 1))).satisfiable
        for k in ks:
            for ds in sets:
                if sat[k, ds]:
                    assert all(sat[k, j] for j in sets if j < ds), (k, ds)
                else:
                    assert not any(sat[j, ds] for j in ks if j < k), (k, ds)

def _preset_link(name: str):
    preset = get_preset(name)
    return preset, derive_beta(parse_quadratic(preset.alpha))


@pytest.mark.slow
class TestPublishedLadders:
    @pytest.mark.parametrize("name", ["sqrt2-b2", "sqrt3m1half-b2"])
    def test_unique_minimal_candidate(self, name):
        preset, link = _preset_link(name)
        k, ds = preset.expected_states, preset.digit_set_size
        out = search_ladder(link, preset.base, PysatSolver(), k_start=k - 1, digit_set=ds, n_max=2000)
        assert (out.states, out.digit_set, len(out.candidates)) == (k, ds, preset.candidates)
        assert [(r.states, r.status) for r in out.rows] == [(k - 1, CellStatus.UNSAT), (k, CellStatus.SAT)]
        bundle = build_digit_dfao(link, preset.base)
        assert equivalent(
            out.candidates[0], bundle.dfao, domain=validity_dfa(link.system), ignore_undefined=True
        )

    def test_phi_candidate_is_the_construction(self, phi_link):
        out = search_ladder(phi_link, 2, PysatSolver(), k_start=8, digit_set=54, n_max=2000)
        bundle = build_digit_dfao(phi_link, 2)
        assert len(out.candidates) == 1
        assert equivalent(
            out.candidates[0], bundle.dfao, domain=validity_dfa(phi_link.system), ignore_undefined=True
        )

    @pytest.mark.parametrize("name", ["bronze-b2", "bronze-b3", "sqrt17m3quarter-b2"])
    def test_candidate_counts(self, name):
        preset, link = _preset_link(name)
        d = build_dictionary(link, preset.base, preset.digit_set_size)
        apta = build_apta(d)
        enc = encode(apta, build_cg(apta), preset.expected_states, link.system, labels=tuple(range(preset.base)))
        cands = enumerate_all(enc, PysatSolver(), link.system)
        assert len(cands) == preset.candidates
        assert all(verify_candidate(c, link, preset.base, 2000) is None for c in cands)
        bundle = build_digit_dfao(link, preset.base)
        domain = validity_dfa(link.system)
        assert any(equivalent(c, bundle.dfao, domain=domain, ignore_undefined=True) for c in cands)
