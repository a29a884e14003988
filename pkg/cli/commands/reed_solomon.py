from __future__ import annotations

from pathlib import Path

import click

from app.codes.reed_solomon import build_rs_scheme, rs_thresholds, table1 as table1_report
from app.core.console_config import console
from app.models.parameter_schemas import RsParams
from app.models.report_schemas import Report
from app.services.code_files import triple_to_text, write_triple
from cli.commands.common import CliState, emit, parse_ints, pass_state


@click.command("rs-build")
@click.argument("q", type=int)
@click.argument("k", type=int)
@click.argument("s", type=int)
@click.option("--points", help="n = q distinct evaluation points; defaults to every element of GF(q).")
@click.option("--relax-parity", is_flag=True, help="Allow odd k or n − s by splitting dimensions ⌊·⌋ / ⌈·⌉.")
@click.option("--advance", "advance_size", type=int, default=None, help="Write 'advance 1..t' into the file.")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), help="Write the triple file here.")
@pass_state
def rs_build(
    state: CliState,
    q: int,
    k: int,
    s: int,
    points: str | None,
    relax_parity: bool,
    advance_size: int | None,
    output: Path | None,
) -> None:
    """Build the Reed-Solomon triple of length n = Q and emit it as a triple file."""
    params = RsParams(q=q, k=k, s=s, points=parse_ints(points, "--points"), relax_parity=relax_parity)
    triple = build_rs_scheme(params)
    thresholds = None if relax_parity else rs_thresholds(params.n, k, s)
    if advance_size is None:
        advance_size = params.n // 2
    advance_set = tuple(range(1, advance_size + 1))
    text = triple_to_text(triple, advance_set)
    if output is not None:
        write_triple(output, triple, advance_set)

    report = Report(
        command="rs-build",
        inputs=params.model_dump(),
        results={
            "triple": text,
            "thresholds": None if thresholds is None else thresholds.model_dump(),
            "output": None if output is None else str(output),
        },
        seed=state.seed,
    )

    def render() -> None:
        if output is None:
            click.echo(text, nl=False)
        else:
            console.print(f"Wrote {output}")
        if thresholds is not None:
            state.display.print_key_values("RS thresholds", thresholds.model_dump())

    emit(state, report, render, (q, k, s))


@click.command("table1")
@click.argument("q", type=int)
@click.argument("k", type=int)
@click.argument("s", type=int)
@pass_state
def table1(state: CliState, q: int, k: int, s: int) -> None:
    """Compare the quantum RS scheme of length n = Q with ramp Shamir."""
    report_body = table1_report(q, k, s)
    report = Report(command="table1", inputs={"q": q, "k": k, "s": s}, results=report_body.model_dump(), seed=state.seed)
    emit(state, report, lambda: state.display.print_table1(report_body), (q, k, s))
