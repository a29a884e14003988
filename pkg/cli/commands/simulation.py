from __future__ import annotations

from pathlib import Path

import click

from app.algebra.finite_field import as_ints
from app.algebra.linalg import Subspace
from app.codes.fixtures import DEMO_ADVANCE_SETS, DEMO_LISTED_C_MAX, DEMO_TRIPLES, demo_names, resolve_demo
from app.models.workflow_schemas import CertificationWorkflowConfig
from app.schemes.advance_sharing import parity_matrix
from app.services.code_files import read_triple, triple_to_text
from app.simulation.protocol import PROTOCOL_TOLERANCE
from app.workflows.certification_workflow import CertificationWorkflow
from cli.commands.common import CliState, emit, parse_ints, parse_subsets, pass_state, triple_argument


@click.command("verify-sim")
@triple_argument
@click.option("--subsets", "subsets", multiple=True, help="'all' (default) or shares such as '1,2;3,4'. Repeatable.")
@click.option("--set", "advance_set", help="Advance set B; defaults to the file's advance line.")
@click.option("--tolerance", type=float, default=PROTOCOL_TOLERANCE, show_default=True)
@click.option("--refresh", is_flag=True, help="With --save, recompute phases instead of reusing a matching saved run.")
@pass_state
def verify_sim(
    state: CliState, triple_file: Path, subsets: tuple[str, ...], advance_set: str | None, tolerance: float, refresh: bool
) -> None:
    """Certify secrecy, reconstruction and advance sharing on the state-vector simulator."""
    loaded = read_triple(triple_file)
    parsed = parse_ints(advance_set, "--set")
    config = CertificationWorkflowConfig(
        name=triple_file.stem,
        triple=loaded.triple,
        advance_set=loaded.advance_set if parsed is None else parsed,
        subsets=parse_subsets(subsets, "--subsets"),
        tolerance=tolerance,
        show_progress=not state.json_output,
        show_tables=not state.json_output,
        save=state.save,
        refresh=refresh,
    )
    report = CertificationWorkflow(config, seed=state.seed).run()
    emit(state, report, None, (triple_file.stem,))


@click.command("demo")
@click.argument("name", type=click.Choice(demo_names()))
@click.option("--refresh", is_flag=True, help="With --save, recompute phases instead of reusing a matching saved run.")
@pass_state
def demo(state: CliState, name: str, refresh: bool) -> None:
    """Run a shipped worked example end to end (aliases: bell-pair, ternary-rs4)."""
    canonical = resolve_demo(name)
    triple = DEMO_TRIPLES[canonical]()
    config = CertificationWorkflowConfig(
        name=name,
        triple=triple,
        advance_set=DEMO_ADVANCE_SETS[canonical],
        with_advance_reps=True,
        show_progress=not state.json_output,
        show_tables=not state.json_output,
        save=state.save,
        refresh=refresh,
    )
    report = CertificationWorkflow(config, seed=state.seed, command="demo").run()
    report.results["triple"] = triple_to_text(triple, DEMO_ADVANCE_SETS[canonical])

    listed = DEMO_LISTED_C_MAX.get(canonical)
    if listed is not None:
        rows, reference = listed
        gf = triple.field.gf
        report.results["listed_basis_parity"] = as_ints(parity_matrix(gf(rows()))).tolist()
        # H from the scheme's RREF C_max agrees with the listed H up to row operations
        built = Subspace.span(gf, report.results["scheme"]["parity"])
        report.results["listed_basis_matches"] = built == Subspace.span(gf, [list(row) for row in reference])

    def render() -> None:
        if listed is not None:
            state.display.print_matrix("H for the listed C_max basis", report.results["listed_basis_parity"])

    emit(state, report, render, (name,))
