from __future__ import annotations

import click

from app.bounds.gilbert_varshamov import (
    asymptotic_parameters,
    asymptotic_report,
    gv_existence_check,
    gv_report,
    gv_search as gv_frontier,
    ratio_enumeration_check,
)
from app.models.parameter_schemas import AsymptoticParams, GvParams
from app.models.report_schemas import Report
from cli.commands.common import CliState, emit, pass_state


def _gv_arguments(command):
    for name in reversed(("q", "n", "k", "s")):
        command = click.argument(name, type=int)(command)
    return command


@click.command("gv-check")
@_gv_arguments
@click.argument("delta_q", type=int)
@click.argument("delta_f", type=int)
@click.argument("delta_t", type=int)
@pass_state
def gv_check(state: CliState, q: int, n: int, k: int, s: int, delta_q: int, delta_f: int, delta_t: int) -> None:
    """Evaluate the existence bound for coset distances (δ_q, δ_f, δ_t)."""
    params = GvParams(q=q, n=n, k=k, s=s, delta_q=delta_q, delta_f=delta_f, delta_t=delta_t)
    body = gv_report(params)
    report = Report(command="gv-check", inputs=params.model_dump(), results=body.model_dump(), seed=state.seed)
    emit(state, report, lambda: state.display.print_gv_check(body), (q, n, k, s, delta_q, delta_f, delta_t))


@click.command("gv-search")
@_gv_arguments
@pass_state
def gv_search(state: CliState, q: int, n: int, k: int, s: int) -> None:
    """Maximal distance triples the bound guarantees."""
    body = gv_frontier(q, n, k, s)
    report = Report(command="gv-search", inputs={"q": q, "n": n, "k": k, "s": s}, results=body.model_dump(), seed=state.seed)
    emit(state, report, lambda: state.display.print_gv_frontier(body), (q, n, k, s))


@click.command("gv-enumerate")
@_gv_arguments
@click.option("--max-delta", type=int, default=3, show_default=True)
@pass_state
def gv_enumerate(state: CliState, q: int, n: int, k: int, s: int, max_delta: int) -> None:
    """Confirm the counting ratios and the bound by enumerating every chain (tiny q and n only)."""
    ratios = ratio_enumeration_check(q, n, k, s)
    existence = gv_existence_check(q, n, k, s, max_delta=max_delta)
    report = Report(
        command="gv-enumerate",
        inputs={"q": q, "n": n, "k": k, "s": s, "max_delta": max_delta},
        results={"ratios": ratios.model_dump(), "existence": [r.model_dump() for r in existence]},
        seed=state.seed,
    )

    def render() -> None:
        state.display.print_ratio_check(ratios)
        state.display.print_existence(existence)

    emit(state, report, render, (q, n, k, s))


@click.command("gv-asymptotic")
@click.argument("q", type=int)
@click.argument("secret_rate", type=float)
@click.argument("randomness_rate", type=float)
@click.option("--eps-q", type=float, default=0.0, show_default=True)
@click.option("--eps-f", type=float, default=0.0, show_default=True)
@click.option("--eps-t", type=float, default=0.0, show_default=True)
@click.option("--find-root", is_flag=True, help="Also solve h_q(ε) + ε log_q(q² − 1) = 1.")
@click.option("--length", "length", type=int, help="Report the code parameters promised at this length.")
@pass_state
def gv_asymptotic(
    state: CliState,
    q: int,
    secret_rate: float,
    randomness_rate: float,
    eps_q: float,
    eps_f: float,
    eps_t: float,
    find_root: bool,
    length: int | None,
) -> None:
    """Check the rate conditions for secret rate R and randomness rate S."""
    params = AsymptoticParams(
        q=q, secret_rate=secret_rate, randomness_rate=randomness_rate, eps_q=eps_q, eps_f=eps_f, eps_t=eps_t
    )
    body = asymptotic_report(params, find_root=find_root)
    results = body.model_dump()
    if length is not None:
        results["code_parameters"] = asymptotic_parameters(params, length).model_dump()
    report = Report(
        command="gv-asymptotic",
        inputs={**params.model_dump(), "find_root": find_root, "length": length},
        results=results,
        seed=state.seed,
    )

    def render() -> None:
        state.display.print_asymptotic(body)
        if length is not None:
            state.display.print_key_values(f"Code parameters at n = {length}", results["code_parameters"])

    emit(state, report, render, (q, secret_rate, randomness_rate))
