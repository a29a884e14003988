from __future__ import annotations

from pathlib import Path

from app.core.config import config as app_config
from app.core.console_config import console, err_console
from app.core.logging_config import get_logger
from app.core.printer import Printer
from app.models.report_schemas import ClassicalComparisonReport, Report
from app.models.workflow_schemas import ClassicalComparisonWorkflowConfig
from app.schemes.classical import compare_subsets, dealer_forgets_experiment
from app.services.report_data_manager import ReportDataManager
from app.services.report_display_manager import ReportDisplayManager

logger = get_logger(__name__)


class ClassicalComparisonWorkflow:
    """
    Runs the classical suite on one scheme: forbidden against advance-shareable
    on every subset, then the dealer-forgets experiment on an advance set.

    Without an explicit advance set the largest advance-shareable subset is used
    (the first in subset order); a scheme with none skips the second phase.
    """

    COMMAND = "classical-compare"

    def __init__(self, config: ClassicalComparisonWorkflowConfig, seed: int | None = None) -> None:
        self.config = config
        self.seed = seed
        self.slug = ReportDataManager.slug_for(self.COMMAND, config.name)
        self.printer = Printer(err_console, enabled=config.show_progress)
        self.display_manager = ReportDisplayManager(console, self.printer, f"classical comparison of {config.name}", self.slug)
        self.data_manager = ReportDataManager(Path(app_config.ADVSHARE_DATA_DIR), self.printer) if config.save else None

    def run(self) -> Report:
        scheme = self.config.scheme
        self.display_manager.display_workflow_start(app_config.ADVSHARE_DATA_DIR if self.data_manager else None)

        # Phase 1: subset comparison
        self.display_manager.display_phase_start(1, "Forbidden vs advance-shareable")
        self.printer.update_item("compare", f"🔍 Comparing {2 ** scheme.n} subsets...")
        subsets = compare_subsets(scheme)
        self.printer.update_item("compare", f"Compared {len(subsets)} subsets", is_done=True)

        # Phase 2: dealer forgets
        advance_set = self.config.advance_set
        if advance_set is None:
            shareable = [r.subset for r in subsets if r.advance_shareable and r.subset]
            advance_set = tuple(max(shareable, key=len)) if shareable else None

        forgets = None
        if advance_set:
            self.display_manager.display_phase_start(2, f"Dealer forgets, B = {list(advance_set)}")
            self.printer.update_item("forgets", "🧮 Computing exact joint distributions...")
            forgets = dealer_forgets_experiment(scheme, advance_set, base=self.config.base)
            self.printer.update_item("forgets", f"Checked {len(forgets.records)} (D, E) pairs", is_done=True)
        else:
            logger.info("No nonempty advance-shareable set; skipping the dealer-forgets phase")

        report = ClassicalComparisonReport(
            q=scheme.q,
            n=scheme.n,
            k=scheme.k,
            subsets=subsets,
            all_agree=all(r.agree for r in subsets),
            dealer_forgets=forgets,
        )
        if self.data_manager:
            self.data_manager.save_data(self.slug, "comparison", report)
        self.display_manager.display_workflow_complete()

        if self.config.show_tables:
            self.display_manager.print_classical_comparison(report)
        return Report(
            command=self.COMMAND,
            inputs=self.config.inputs(),
            results=report.model_dump(),
            seed=self.seed,
        )
