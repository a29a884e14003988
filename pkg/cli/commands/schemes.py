from __future__ import annotations

from dataclasses import asdict
from pathlib import Path

import click

from app.algebra.finite_field import as_ints
from app.codes.symplectic import css_components, is_deterministic
from app.core.errors import EmptyDifference, EnumerationTooLarge
from app.models.report_schemas import Report
from app.schemes.advance_sharing import (
    access_structure,
    advance_diagnostics,
    advance_rep_records,
    advance_sufficient,
    build_scheme,
    random_coset_choice,
    solvable_for_all_cosets,
)
from app.services.code_files import read_triple
from cli.commands.common import CliState, emit, parse_ints, parse_subsets, pass_state, triple_argument


def _advance_set(option_value: str | None, file_value: tuple[int, ...]) -> tuple[int, ...]:
    parsed = parse_ints(option_value, "--set")
    return file_value if parsed is None else parsed


@click.command("validate")
@triple_argument
@pass_state
def validate(state: CliState, triple_file: Path) -> None:
    """Check that TRIPLE_FILE describes a valid C_S ⊆ C_R ⊆ C_max chain."""
    loaded = read_triple(triple_file)
    triple = loaded.triple
    results = {
        "valid": True,
        "q": triple.q,
        "n": triple.n,
        "k": triple.k,
        "s": triple.s,
        "dims": [triple.c_s.dim, triple.c_r.dim, triple.c_max.dim],
        "completed_c_max": loaded.completed_c_max,
        "c_max_css": css_components(triple.c_max)[2],
        "deterministic": is_deterministic(triple),
        "advance_set": list(loaded.advance_set),
    }
    report = Report(command="validate", inputs={"triple_file": triple_file.name}, results=results, seed=state.seed)
    emit(state, report, lambda: state.display.print_key_values(f"{triple_file.name}", results), (triple_file.stem,))


@click.command("classify")
@triple_argument
@click.option("--subset", "subsets", multiple=True, help="Shares such as '1,2'; ';' separates subsets. Repeatable.")
@click.option("--all", "all_subsets", is_flag=True, help="Classify all 2^n subsets (the default).")
@pass_state
def classify(state: CliState, triple_file: Path, subsets: tuple[str, ...], all_subsets: bool) -> None:
    """Leakage dimension, access class and advance-shareability of share subsets."""
    triple = read_triple(triple_file).triple
    chosen = None if all_subsets else parse_subsets(subsets, "--subset")
    records = access_structure(triple, chosen)
    report = Report(
        command="classify",
        inputs={"triple_file": triple_file.name, "subsets": None if chosen is None else [list(a) for a in chosen]},
        results={"records": [r.model_dump() for r in records]},
        seed=state.seed,
    )
    emit(state, report, lambda: state.display.print_access_structure(records), (triple_file.stem,))


@click.command("advance-check")
@triple_argument
@click.option("--set", "advance_set", help="Advance set B such as '1,2'; defaults to the file's advance line.")
@pass_state
def advance_check(state: CliState, triple_file: Path, advance_set: str | None) -> None:
    """Decide whether B can be distributed before the secret is known."""
    loaded = read_triple(triple_file)
    scheme = build_scheme(loaded.triple, _advance_set(advance_set, loaded.advance_set))
    diagnostics = asdict(advance_diagnostics(scheme))
    results = {key: list(value) if isinstance(value, tuple) else value for key, value in diagnostics.items()}
    try:
        results["sufficient_bound_holds"] = advance_sufficient(loaded.triple, scheme.advance_set)
    except (EnumerationTooLarge, EmptyDifference):
        results["sufficient_bound_holds"] = None
    results["solvable_for_all_cosets"] = solvable_for_all_cosets(scheme)
    report = Report(
        command="advance-check",
        inputs={"triple_file": triple_file.name, "advance_set": list(scheme.advance_set)},
        results=results,
        seed=state.seed,
    )
    emit(state, report, lambda: state.display.print_key_values("Advance-set diagnostics", results), (triple_file.stem,))


@click.command("advance-rep")
@triple_argument
@click.option("--secret", help="Secret m such as '1,0'; omit to list every (m, r).")
@click.option("--rand", "randomness", help="Coset choice r; drawn from --seed when omitted and s > 0.")
@click.option("--set", "advance_set", help="Advance set B; defaults to the file's advance line.")
@pass_state
def advance_rep(state: CliState, triple_file: Path, secret: str | None, randomness: str | None, advance_set: str | None) -> None:
    """Representatives of the encoding cosets supported on the complement of B."""
    loaded = read_triple(triple_file)
    scheme = build_scheme(loaded.triple, _advance_set(advance_set, loaded.advance_set))
    m = parse_ints(secret, "--secret")
    r = parse_ints(randomness, "--rand")
    if m is None:
        if r is not None:
            raise click.UsageError("--rand needs --secret")
        pairs = None
    else:
        if r is None and scheme.s > 0:
            if state.seed is None:
                raise click.UsageError("give --rand or a global --seed to draw the coset choice")
            r = tuple(as_ints(random_coset_choice(scheme, state.seed)).tolist())
        pairs = [(m, r)]
    records = advance_rep_records(scheme, pairs)
    report = Report(
        command="advance-rep",
        inputs={
            "triple_file": triple_file.name,
            "advance_set": list(scheme.advance_set),
            "secret": None if m is None else list(m),
            "randomness": None if r is None else list(r),
        },
        results={"records": [rec.model_dump() for rec in records]},
        seed=state.seed,
    )
    emit(state, report, lambda: state.display.print_advance_reps(records), (triple_file.stem,))
