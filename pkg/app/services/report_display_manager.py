from __future__ import annotations

from typing import Any, Iterable, Mapping

from rich.console import Console
from rich.table import Table

from app.core.printer import Printer
from app.models.report_schemas import (
    AccessRecord,
    AdvanceRepRecord,
    AsymptoticReport,
    ClassicalComparisonReport,
    GvCheckReport,
    GvExistenceRecord,
    GvFrontierReport,
    ProtocolCertification,
    RatioCheckReport,
    Table1Report,
)


def _mark(flag: bool | None) -> str:
    if flag is None:
        return "–"
    return "✅" if flag else "❌"


def _subset(values: Iterable[int]) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


class ReportDisplayManager:
    """
    Renders reports as Rich tables on stdout and drives the phase messages of
    multi-phase workflows through the Printer.
    """

    PHASE_EMOJIS = {1: "🧮", 2: "🔍", 3: "⚛️", 4: "📊", 5: "🎯"}

    def __init__(self, console: Console, printer: Printer | None = None, run_name: str = "", slug: str = ""):
        self.console = console
        self.printer = printer
        self.run_name = run_name
        self.slug = slug

    # workflow status

    def display_workflow_start(self, data_dir: str | None = None) -> None:
        if not self.printer:
            return
        self.printer.update_item("workflow_start", f"🚀 Starting {self.run_name}", is_done=True, hide_checkmark=True)
        if data_dir:
            self.printer.update_item(
                "slug", f"📁 Data directory: {data_dir}/{self.slug}", is_done=True, hide_checkmark=True
            )

    def display_phase_start(self, phase_number: int, phase_name: str) -> None:
        if not self.printer:
            return
        emoji = self.PHASE_EMOJIS.get(phase_number, "🔄")
        self.printer.update_item(
            f"phase_{phase_number}", f"{emoji} PHASE {phase_number}: {phase_name}", is_done=True, hide_checkmark=True
        )

    def display_workflow_complete(self) -> None:
        if not self.printer:
            return
        self.printer.update_item("workflow_complete", f"🏁 {self.run_name} completed", is_done=True)
        self.printer.end()

    # report tables

    def print_key_values(self, title: str, values: Mapping[str, Any]) -> None:
        table = Table(title=title, show_header=False)
        table.add_column("field", style="bold")
        table.add_column("value")
        for key, value in values.items():
            table.add_row(key, _mark(value) if isinstance(value, bool) else str(value))
        self.console.print(table)

    def print_matrix(self, title: str, rows: Iterable[Iterable[int]]) -> None:
        table = Table(title=title, show_header=False)
        for row in rows:
            table.add_row(" ".join(str(v) for v in row))
        self.console.print(table)

    def print_access_structure(self, records: list[AccessRecord]) -> None:
        table = Table(title="Access structure")
        table.add_column("A")
        table.add_column("ℓ(A)", justify="right")
        table.add_column("class")
        table.add_column("advance-shareable", justify="center")
        table.add_column("|A| ≤ d_s − 1", justify="center")
        for record in records:
            table.add_row(
                _subset(record.subset),
                str(record.leakage_dim),
                record.access_class,
                _mark(record.advance_shareable),
                _mark(record.sufficient_bound_holds),
            )
        self.console.print(table)

    def print_advance_reps(self, records: list[AdvanceRepRecord]) -> None:
        table = Table(title="Advance representatives")
        table.add_column("m")
        table.add_column("r")
        table.add_column("label")
        table.add_column("supported on B̄")
        for record in records:
            rep = record.error if record.representative is None else " ".join(map(str, record.representative))
            table.add_row(
                " ".join(map(str, record.secret)),
                " ".join(map(str, record.randomness)),
                " ".join(map(str, record.label)),
                rep,
            )
        self.console.print(table)

    def print_table1(self, report: Table1Report) -> None:
        table = Table(title=f"Quantum vs ramp Shamir, (q, n, k, s) = ({report.q}, {report.n}, {report.k}, {report.s})")
        table.add_column("")
        table.add_column("quantum")
        table.add_column("classical")
        rows = [
            ("secret size", "secret_size"),
            ("share size", "share_size"),
            ("qualified sets", "qualified_sets"),
            ("forbidden sets", "forbidden_sets"),
            ("advance-shareable sets", "advance_shareable_sets"),
        ]
        for label, field in rows:
            table.add_row(label, getattr(report.quantum, field), getattr(report.classical, field))
        for label, column in (("quantum", report.quantum), ("classical", report.classical)):
            t = column.thresholds
            table.add_row(
                f"{label} thresholds", f"forbidden ≤ {t.forbidden_max}, qualified ≥ {t.qualified_min}", f"advance ≤ {t.advance_max}"
            )
        self.console.print(table)
        self.console.print(f"Quantum advance advantage (s < k): {_mark(report.advantage)}")

    def print_classical_comparison(self, report: ClassicalComparisonReport) -> None:
        table = Table(title=f"Classical scheme over GF({report.q}), n = {report.n}, k = {report.k}")
        table.add_column("A")
        table.add_column("forbidden", justify="center")
        table.add_column("advance-shareable", justify="center")
        table.add_column("agree", justify="center")
        for record in report.subsets:
            table.add_row(
                _subset(record.subset), _mark(record.forbidden), _mark(record.advance_shareable), _mark(record.agree)
            )
        self.console.print(table)
        self.console.print(f"Forbidden ⇔ advance-shareable on every subset: {_mark(report.all_agree)}")

        forgets = report.dealer_forgets
        if forgets is None:
            return
        table = Table(title=f"Dealer forgets the randomness, B = {_subset(forgets.advance_set)}")
        table.add_column("D ⊆ B")
        table.add_column("E ⊆ B̄")
        table.add_column("I(D∪E; S)", justify="right")
        table.add_column("I(E; S)", justify="right")
        table.add_column("exact", justify="center")
        for record in forgets.records:
            table.add_row(
                _subset(record.kept),
                _subset(record.rest),
                f"{record.info_with_kept:.6f}",
                f"{record.info_rest_only:.6f}",
                _mark(record.conditionally_independent),
            )
        self.console.print(table)
        self.console.print(
            f"max deviation {forgets.max_deviation:.3e}, exact equality {_mark(forgets.exact_equality)}, "
            f"gain when the dealer keeps B: {forgets.original_max_gain:.6f}"
        )

    def print_gv_check(self, report: GvCheckReport) -> None:
        self.print_key_values("Gilbert-Varshamov check", report.model_dump())

    def print_gv_frontier(self, report: GvFrontierReport) -> None:
        table = Table(title=f"Feasible (δ_q, δ_f, δ_t) frontier, (q, n, k, s) = ({report.q}, {report.n}, {report.k}, {report.s})")
        table.add_column("δ_q", justify="right")
        table.add_column("δ_f", justify="right")
        table.add_column("δ_t", justify="right")
        for dq, df, dt in report.frontier:
            table.add_row(str(dq), str(df), str(dt))
        self.console.print(table)

    def print_ratio_check(self, report: RatioCheckReport) -> None:
        self.print_key_values("Chain ratio enumeration", report.model_dump())

    def print_existence(self, records: list[GvExistenceRecord]) -> None:
        table = Table(title="Exhaustive existence check")
        table.add_column("(δ_q, δ_f, δ_t)")
        table.add_column("bound", justify="right")
        table.add_column("witness", justify="center")
        for record in records:
            table.add_row(str(tuple(record.deltas)), record.lhs, _mark(record.witness_found))
        self.console.print(table)

    def print_asymptotic(self, report: AsymptoticReport) -> None:
        self.print_key_values("Asymptotic rate conditions", report.model_dump())

    def print_certification(self, report: ProtocolCertification) -> None:
        table = Table(title=f"Simulator certification, (q, n, k, s) = ({report.q}, {report.n}, {report.k}, {report.s})")
        table.add_column("A")
        table.add_column("class")
        table.add_column("ℓ(A)", justify="right")
        table.add_column("χ (base q)", justify="right")
        table.add_column("secrecy", justify="right")
        table.add_column("overlap", justify="right")
        table.add_column("passed", justify="center")
        for record in report.subsets:
            table.add_row(
                _subset(record.subset),
                record.access_class,
                str(record.leakage_dim),
                f"{record.holevo:.6f}",
                f"{record.secrecy:.2e}",
                f"{record.distinguishability:.2e}",
                _mark(record.passed),
            )
        self.console.print(table)
        self.console.print(
            f"B = {_subset(report.advance_set)} advance-shareable {_mark(report.advance_shareable)}, "
            f"invariance {report.advance_invariance:.2e}; all passed {_mark(report.all_passed)}"
        )
