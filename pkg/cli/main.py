from __future__ import annotations

import sys

import click

from app.core.config import Config
from app.core.console_config import err_console
from app.core.logging_config import get_logger
from cli.commands.bounds import gv_asymptotic, gv_check, gv_enumerate, gv_search
from cli.commands.classical import classical_compare
from cli.commands.common import CliState
from cli.commands.reed_solomon import rs_build, table1
from cli.commands.schemes import advance_check, advance_rep, classify, validate
from cli.commands.simulation import demo, verify_sim

logger = get_logger(__name__)


class AdvanceShareGroup(click.Group):
    """Maps domain and validation errors to ``error[<code>]: <message>`` and exit status 1."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ValueError as exc:
            code = getattr(exc, "code", type(exc).__name__)
            logger.debug("command failed", exc_info=exc)
            err_console.print(f"error[{code}]: {exc}", markup=False, highlight=False)
            sys.exit(1)


@click.group(cls=AdvanceShareGroup)
@click.option("--json", "json_output", is_flag=True, help="Print the JSON report instead of tables.")
@click.option("--save", is_flag=True, help="Also write the report under ADVSHARE_DATA_DIR/<slug>/<command>.json.")
@click.option("--seed", type=int, default=None, help="Seed for every random draw of the command.")
@click.pass_context
def cli(ctx: click.Context, json_output: bool, save: bool, seed: int | None) -> None:
    """Advance sharing of quantum shares for classical secrets."""
    Config.validate_config()
    ctx.obj = CliState(json_output=json_output, save=save, seed=seed)


for command in (
    validate,
    classify,
    advance_check,
    advance_rep,
    rs_build,
    table1,
    verify_sim,
    classical_compare,
    gv_check,
    gv_search,
    gv_enumerate,
    gv_asymptotic,
    demo,
):
    cli.add_command(command)


if __name__ == "__main__":
    cli()
