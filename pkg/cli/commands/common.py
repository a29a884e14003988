from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import click

from app.core.config import config as app_config
from app.core.console_config import console
from app.models.report_schemas import Report
from app.services.report_data_manager import ReportDataManager
from app.services.report_display_manager import ReportDisplayManager


@dataclass
class CliState:
    json_output: bool = False
    save: bool = False
    seed: Optional[int] = None

    @property
    def display(self) -> ReportDisplayManager:
        return ReportDisplayManager(console)


pass_state = click.make_pass_decorator(CliState, ensure=True)


def emit(state: CliState, report: Report, render: Callable[[], None] | None = None, slug_parts: tuple = ()) -> None:
    """Print ``report`` as JSON or through ``render`` and optionally persist it."""
    if state.save:
        manager = ReportDataManager(Path(app_config.ADVSHARE_DATA_DIR))
        slug = ReportDataManager.slug_for(report.command, *slug_parts)
        manager.save_data(slug, report.command, report)
    if state.json_output:
        click.echo(report.model_dump_json(indent=2))
    elif render is not None:
        render()


def parse_ints(text: str | None, option: str) -> tuple[int, ...] | None:
    """``"1,2 3"`` -> (1, 2, 3); None stays None."""
    if text is None:
        return None
    tokens = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise click.BadParameter(f"expected integers, got {text!r}", param_hint=option) from exc


def parse_subsets(values: tuple[str, ...], option: str) -> list[tuple[int, ...]] | None:
    """Repeated ``--subset`` values, or None for all subsets when ``all`` or nothing is given."""
    if not values or any(v.strip().lower() == "all" for v in values):
        return None
    subsets = []
    for value in values:
        for chunk in value.split(";"):
            subsets.append(parse_ints(chunk, option) or ())
    return subsets


triple_argument = click.argument("triple_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
