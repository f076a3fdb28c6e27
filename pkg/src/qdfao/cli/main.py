# qdfao/cli/main.py
"""
qdfao command line.

Command output goes to standard output; logs (with --verbose) go to standard error.
Exit codes: 0 success, 1 usage or input error, 2 verification mismatch, 3 solver failure.
"""

from __future__ import annotations

import sys
from dataclasses import replace

import click

from qdfao.automata.automaton_io import to_dot, write_automaton
from qdfao.conf.read_conf import Settings, get_conf
from qdfao.linrel.relation_builder import set_state_cap
from qdfao.models.beta_linkage import BetaLinkage
from qdfao.models.numeration_system import NumerationSystem
from qdfao.models.qdfao_errors import (
    QdfaoError,
    QdfaoInputError,
    QdfaoRepresentationError,
    QdfaoSolverError,
    QdfaoVerificationError,
)
from qdfao.numeration.numeration import parse_representation
from qdfao.numeration.validity import base_state_labels, validity_dfa
from qdfao.pipeline.bundle_store import load_bundle, save_bundle
from qdfao.pipeline.digit_bundle import build_digit_dfao
from qdfao.pipeline.floor_alpha import ProjectionOrder, ShiftPath
from qdfao.pipeline.linkage import derive_beta
from qdfao.pipeline.presets import PRESETS, get_preset
from qdfao.qexact.qexact import format_expansion, parse_quadratic
from qdfao.satmin.decode import verify_candidate
from qdfao.satmin.encoding import ConstraintSet, Granularity
from qdfao.satmin.ladder import search_ladder
from qdfao.satmin.solvers import make_solver
from qdfao.utils.file_utils import write_file
from qdfao.utils.log import log_d, log_e, set_log_enabled
from qdfao.utils.str_utils import digit_char, digits_to_str, int_to_base, str_to_digits

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_SOLVER = 3


# --------------------------------------------------------------------------------------------------
# Helpers
# --------------------------------------------------------------------------------------------------
def _settings(ctx: click.Context) -> Settings:
    return ctx.obj["settings"]


def _link(alpha: str, system: str | None = None) -> BetaLinkage:
    link = derive_beta(parse_quadratic(alpha))
    if system is not None:
        wanted = NumerationSystem.parse(system)
        if wanted != link.system:
            raise QdfaoInputError(f"{alpha} is built over {link.system}, not {wanted}")
    return link


def _case(preset: str | None, alpha: str | None, base: int | None) -> tuple[str, int]:
    if preset is not None:
        if alpha is not None or base is not None:
            raise click.UsageError("give either --preset or --alpha/--base, not both")
        p = get_preset(preset)
        return p.alpha, p.base
    if alpha is None or base is None:
        raise click.UsageError("--alpha and --base are required without --preset")
    return alpha, base


def _digits(text: str) -> list[int]:
    try:
        return str_to_digits(text)
    except ValueError as e:
        raise QdfaoRepresentationError(str(e)) from e


# --------------------------------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------------------------------
@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Debug logs on standard error.")
@click.option("--conf", "conf_file", default="./.conf/config.ini", show_default=True, help="INI settings file.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, conf_file: str):
    """Digit automata for quadratic irrationals, and SAT-based minimality checks."""
    settings = get_conf(conf_file)
    set_log_enabled(verbose or settings.log_enabled)
    set_state_cap(settings.state_cap)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@cli.command()
@click.argument("alpha")
@click.argument("base", type=int)
@click.argument("count", type=int)
@click.option("--via-automaton", is_flag=True, help="Read the digits off the digit automaton.")
@click.option("--automaton", "automaton_path", default=None, help="Saved automaton to use with --via-automaton.")
def digits(alpha: str, base: int, count: int, via_automaton: bool, automaton_path: str | None):
    """Integer part, a point, then COUNT base-BASE digits of ALPHA."""
    q = parse_quadratic(alpha)
    if count < 0:
        raise QdfaoInputError(f"count must be non-negative, got {count}")
    if not via_automaton:
        click.echo(format_expansion(q, base, count))
        return
    link = derive_beta(q)
    if automaton_path is not None:
        dfao, _manifest = load_bundle(automaton_path)
    else:
        dfao = build_digit_dfao(link, base).dfao
    int_part = q.floor()
    head = int_to_base(int_part, base) if int_part >= 0 else "-" + int_to_base(-int_part, base)
    body = []
    power = 1
    for n in range(count):
        d = dfao.run(link.system.encode(power))
        if d is None:
            raise QdfaoVerificationError(f"automaton has no output for b^{n}", index=n)
        body.append(digit_char(d, base))
        power *= base
    click.echo(f"{head}.{''.join(body)}" if count else head)


@cli.command()
@click.argument("n", type=int)
@click.option("--system", "system", required=True, help="fib, pell or ost:[d1,...,dm]")
def encode(n: int, system: str):
    """Greedy representation of N."""
    click.echo(digits_to_str(NumerationSystem.parse(system).encode(n)))


@cli.command()
@click.argument("digit_string")
@click.option("--system", "system", required=True, help="fib, pell or ost:[d1,...,dm]")
@click.option("--lenient", is_flag=True, help="Evaluate without checking the digit rules.")
def decode(digit_string: str, system: str, lenient: bool):
    """Value of a digit string."""
    sys_ = NumerationSystem.parse(system)
    if lenient:
        click.echo(sys_.decode(_digits(digit_string), strict=False))
        return
    rep = parse_representation(sys_, digit_string)
    click.echo(sys_.decode(rep.digits))


@cli.command()
@click.option("--preset", default=None, help="Named case, see `qdfao presets`.")
@click.option("--alpha", default=None)
@click.option("--base", type=int, default=None)
@click.option("--system", default=None, help="Expected numeration system; the build fails on a mismatch.")
@click.option("--out", "out_path", required=True, help="Automaton file; the manifest goes next to it.")
@click.option("--path", "shift_path", type=click.Choice([p.value for p in ShiftPath]), default=ShiftPath.WEIGHTED.value)
@click.option(
    "--order", type=click.Choice([o.value for o in ProjectionOrder]), default=ProjectionOrder.EAGER.value
)
def build(
    preset: str | None,
    alpha: str | None,
    base: int | None,
    system: str | None,
    out_path: str,
    shift_path: str,
    order: str,
):
    """Build, minimize and save the digit automaton."""
    here = "cli.build"
    alpha, base = _case(preset, alpha, base)
    link = _link(alpha, system)
    bundle = build_digit_dfao(link, base, shift_path, order)
    manifest = save_bundle(bundle, out_path, preset)
    log_d(here, out_path, manifest.build_hash)
    click.echo(f"{manifest.states} states")


@cli.command()
@click.argument("automaton_path")
@click.argument("digit_string")
def run(automaton_path: str, digit_string: str):
    """Output of a saved automaton on a digit string."""
    dfao, manifest = load_bundle(automaton_path)
    word = _digits(digit_string)
    if manifest is not None:
        parse_representation(NumerationSystem.parse(manifest.system), digit_string)
    out = dfao.run(word)
    if out is None:
        raise QdfaoRepresentationError(f"invalid representation: {digit_string}")
    click.echo(out)


@cli.command()
@click.argument("automaton_path")
@click.argument("alpha")
@click.argument("base", type=int)
@click.option("--n-max", type=int, default=10_000, show_default=True)
def verify(automaton_path: str, alpha: str, base: int, n_max: int):
    """Check a saved automaton against the exact digits for n < N_MAX."""
    dfao, _manifest = load_bundle(automaton_path)
    link = derive_beta(parse_quadratic(alpha))
    failing = verify_candidate(dfao, link, base, n_max)
    if failing is not None:
        raise QdfaoVerificationError(f"first mismatch at n={failing}", index=failing)
    click.echo(f"pass {n_max}")


@cli.command()
@click.option("--preset", default=None)
@click.option("--alpha", default=None)
@click.option("--base", type=int, default=None)
@click.option("--k-min", type=int, default=1, show_default=True)
@click.option("--k-max", type=int, default=64, show_default=True)
@click.option("--digit-set-start", type=int, default=1, show_default=True)
@click.option("--digit-set-step", type=int, default=1, show_default=True)
@click.option("--digit-set-max", type=int, default=4096, show_default=True)
@click.option("--n-max", type=int, default=10_000, show_default=True)
@click.option("--enumerate/--no-enumerate", "enumerate_candidates", default=True, show_default=True)
@click.option(
    "--granularity",
    type=click.Choice([g.value for g in Granularity]),
    default=Granularity.TRANSITIONS.value,
    show_default=True,
)
@click.option("--constraints", type=click.Choice([c.value for c in ConstraintSet]), default=None)
@click.option("--no-symmetry-breaking", is_flag=True)
@click.option("--solver", "solver_name", default=None, help="pysat solver name (overrides settings).")
@click.option("--solver-path", default=None, help="External DIMACS solver executable (overrides settings).")
@click.option("--out-dir", default=None, help="Write the candidates there as candidate_<i>.dfao.")
@click.pass_context
def satmin(
    ctx: click.Context,
    preset: str | None,
    alpha: str | None,
    base: int | None,
    k_min: int,
    k_max: int,
    digit_set_start: int,
    digit_set_step: int,
    digit_set_max: int,
    n_max: int,
    enumerate_candidates: bool,
    granularity: str,
    constraints: str | None,
    no_symmetry_breaking: bool,
    solver_name: str | None,
    solver_path: str | None,
    out_dir: str | None,
):
    """Search for the smallest automaton consistent with the digits, and list the candidates."""
    settings = _settings(ctx)
    alpha, base = _case(preset, alpha, base)
    link = _link(alpha)
    info = replace(
        settings.solver,
        name=solver_name or settings.solver.name,
        path=solver_path or settings.solver.path,
    )
    solver = make_solver(info, work_dir=settings.work_dir)
    outcome = search_ladder(
        link,
        base,
        solver,
        k_start=k_min,
        digit_set=digit_set_start,
        step=digit_set_step,
        n_max=n_max,
        max_states=k_max,
        max_digit_set=digit_set_max,
        constraints=constraints,
        granularity=granularity,
        symmetry_breaking=not no_symmetry_breaking,
        enumerate_candidates=enumerate_candidates,
    )
    click.echo(outcome.to_table())
    if not outcome.found:
        raise QdfaoSolverError.from_process(solver.name, None, message=f"no automaton up to {k_max} states")
    if out_dir is not None:
        for i, cand in enumerate(outcome.candidates):
            write_file(f"{out_dir}/candidate_{i}.dfao", write_automaton(cand))
    passed = sum(outcome.verified)
    click.echo(f"minimal states {outcome.states}, candidates {len(outcome.candidates)}, verified {passed}")


@cli.command("export-dot")
@click.argument("automaton_path", required=False)
@click.option("--validity", "validity_system", default=None, help="Export the valid-representation DFA instead.")
def export_dot(automaton_path: str | None, validity_system: str | None):
    """Graphviz text for a saved automaton, or for the digit-rule DFA of a system."""
    if validity_system is not None:
        base_dfa = validity_dfa(NumerationSystem.parse(validity_system))
        click.echo(to_dot(base_dfa, labels=base_state_labels(base_dfa), name="base"), nl=False)
        return
    if automaton_path is None:
        raise click.UsageError("give an automaton file or --validity")
    dfao, _manifest = load_bundle(automaton_path)
    click.echo(to_dot(dfao), nl=False)


@cli.command()
def presets():
    """Named cases with their expected state counts."""
    for p in PRESETS.values():
        expected = "-" if p.expected_states is None else str(p.expected_states)
        flag = "" if p.in_default_run else " (not in default run)"
        click.echo(f"{p.name}\t{p.alpha}\tbase {p.base}\t{p.system or '-'}\t{expected}{flag}")


# --------------------------------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------------------------------
def main(argv: list[str] | None = None) -> int:
    here = "cli.main"
    try:
        rc = cli.main(args=argv, prog_name="qdfao", standalone_mode=False)
        return rc if isinstance(rc, int) else EXIT_OK
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except QdfaoVerificationError as e:
        click.echo(f"verification failed: {e}", err=True)
        return EXIT_VERIFY
    except QdfaoSolverError as e:
        log_e(here, e.model.message, e.model.instance_path)
        click.echo(f"solver failure: {e}", err=True)
        return EXIT_SOLVER
    except (QdfaoError, FileNotFoundError) as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
