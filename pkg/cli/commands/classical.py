from __future__ import annotations

from pathlib import Path

import click

from app.algebra.finite_field import field_from_order
from app.models.workflow_schemas import ClassicalComparisonWorkflowConfig
from app.schemes.classical import one_time_pad_scheme, ramp_shamir_scheme
from app.services.code_files import read_classical
from app.workflows.classical_comparison_workflow import ClassicalComparisonWorkflow
from cli.commands.common import CliState, emit, parse_ints, pass_state


@click.command("classical-compare")
@click.argument("scheme_file", required=False, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--ramp-shamir", nargs=4, type=int, metavar="Q N K S", help="Use the ramp Shamir scheme instead of a file.")
@click.option("--one-time-pad", is_flag=True, help="Use the two-share one-time pad.")
@click.option("--set", "advance_set", help="Advance set B for the dealer-forgets phase.")
@click.option("--base", type=float, default=2.0, show_default=True, help="Logarithm base of the information values.")
@pass_state
def classical_compare(
    state: CliState,
    scheme_file: Path | None,
    ramp_shamir: tuple[int, int, int, int] | None,
    one_time_pad: bool,
    advance_set: str | None,
    base: float,
) -> None:
    """Forbidden versus advance-shareable sets and the dealer-forgets experiment for a classical scheme."""
    sources = [scheme_file is not None, bool(ramp_shamir), one_time_pad]
    if sum(sources) != 1:
        raise click.UsageError("give exactly one of SCHEME_FILE, --ramp-shamir or --one-time-pad")

    extra: dict = {}
    if scheme_file is not None:
        scheme, name = read_classical(scheme_file), scheme_file.stem
        extra["scheme_file"] = scheme_file.name
    elif ramp_shamir:
        q, n, k, s = ramp_shamir
        scheme, name = ramp_shamir_scheme(field_from_order(q), n, k, s), f"ramp-shamir-{q}-{n}-{k}-{s}"
        extra["ramp_shamir"] = [q, n, k, s]
    else:
        scheme, name = one_time_pad_scheme(), "one-time-pad"

    config = ClassicalComparisonWorkflowConfig(
        name=name,
        scheme=scheme,
        advance_set=parse_ints(advance_set, "--set"),
        base=base,
        show_progress=not state.json_output,
        show_tables=not state.json_output,
        save=state.save,
        extra_inputs=extra,
    )
    report = ClassicalComparisonWorkflow(config, seed=state.seed).run()
    emit(state, report, None, (name,))
