from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel

from app.algebra.finite_field import as_ints
from app.core.config import config as app_config
from app.core.console_config import console, err_console
from app.core.logging_config import get_logger
from app.core.printer import Printer
from app.models.report_schemas import AccessRecord, AdvanceRepRecord, ProtocolCertification, Report
from app.models.workflow_schemas import CertificationWorkflowConfig
from app.schemes.advance_sharing import (
    Scheme,
    access_structure,
    advance_diagnostics,
    advance_rep_records,
    build_scheme,
    solvable_for_all_cosets,
)
from app.services.report_data_manager import ReportDataManager
from app.services.report_display_manager import ReportDisplayManager
from app.simulation.protocol import verify_protocol

T = TypeVar("T", bound=BaseModel)

logger = get_logger(__name__)


def _plain(data: Any) -> Any:
    return json.loads(json.dumps(data))


def scheme_summary(scheme: Scheme) -> dict[str, Any]:
    """Transversals, H and the advance-set diagnostics as plain lists and integers."""
    diagnostics = asdict(advance_diagnostics(scheme))
    return {
        "secret_transversal": as_ints(scheme.secret_transversal).tolist(),
        "randomness_transversal": as_ints(scheme.randomness_transversal).tolist(),
        "c_max_basis": as_ints(scheme.triple.c_max.basis).tolist(),
        "parity": as_ints(scheme.parity).tolist(),
        "diagnostics": {key: list(value) if isinstance(value, tuple) else value for key, value in diagnostics.items()},
        "solvable_for_all_cosets": solvable_for_all_cosets(scheme),
    }


class CertificationWorkflow:
    """
    Orchestrates a full check of one scheme: the scheme and its parity matrix,
    the access structure, optionally every advance representative, and the
    simulator certification.
    """

    COMMAND = "verify-sim"

    def __init__(self, config: CertificationWorkflowConfig, seed: int | None = None, command: str | None = None) -> None:
        self.config = config
        self.seed = seed
        self.command = command or self.COMMAND
        self.slug = ReportDataManager.slug_for(self.command, config.name)
        self.printer = Printer(err_console, enabled=config.show_progress)
        self.display_manager = ReportDisplayManager(console, self.printer, f"{self.command} {config.name}", self.slug)
        self.data_manager = ReportDataManager(Path(app_config.ADVSHARE_DATA_DIR), self.printer) if config.save else None
        self.reuse = False

    def _save(self, phase: str, data: Any) -> None:
        if self.data_manager:
            self.data_manager.save_data(self.slug, phase, data)

    def _saved_run_matches(self, summary: dict[str, Any]) -> bool:
        """True when a saved run used the same scheme and inputs, so its phases can be reused."""
        if not self.data_manager:
            return False
        if self.config.refresh:
            self.data_manager.clear_cache(self.slug)
            return False
        if not self.data_manager.has_cached_data(self.slug, "scheme"):
            return False
        return (
            self.data_manager.load_data(self.slug, "scheme") == _plain(summary)
            and self.data_manager.load_data(self.slug, "inputs") == _plain(self.config.inputs())
        )

    def _load(self, phase: str, label: str, output_model: type[T] | None = None) -> Any:
        if not self.reuse:
            return None
        loaded = self.data_manager.load_data(self.slug, phase, output_model)
        if loaded is not None:
            self.printer.update_item(phase, f"📁 Using cached {label}", is_done=True)
        return loaded

    def run(self) -> Report:
        triple = self.config.triple
        self.display_manager.display_workflow_start(app_config.ADVSHARE_DATA_DIR if self.data_manager else None)
        results: dict[str, Any] = {}

        # Phase 1: scheme
        self.display_manager.display_phase_start(1, "Scheme and parity matrix")
        scheme = build_scheme(triple, self.config.advance_set)
        results["scheme"] = scheme_summary(scheme)
        self.reuse = self._saved_run_matches(results["scheme"])
        self._save("scheme", results["scheme"])
        self._save("inputs", self.config.inputs())

        # Phase 2: access structure
        self.display_manager.display_phase_start(2, "Access structure")
        cached = self._load("access_structure", "access structure")
        if cached is not None:
            records = [AccessRecord.model_validate(r) for r in cached]
        else:
            records = access_structure(triple, self.config.subsets)
            self._save("access_structure", [r.model_dump() for r in records])
        results["access_structure"] = [r.model_dump() for r in records]

        phase = 3
        reps = None
        if self.config.with_advance_reps:
            self.display_manager.display_phase_start(phase, "Advance representatives")
            cached = self._load("advance_reps", "advance representatives")
            if cached is not None:
                reps = [AdvanceRepRecord.model_validate(r) for r in cached]
            else:
                reps = advance_rep_records(scheme)
                self._save("advance_reps", [r.model_dump() for r in reps])
            results["advance_reps"] = [r.model_dump() for r in reps]
            phase += 1

        # Last phase: simulator
        self.display_manager.display_phase_start(phase, "Simulator certification")
        certification = self._load("certification", "simulator certification", ProtocolCertification)
        if certification is None:
            certification = verify_protocol(scheme, self.config.subsets, self.config.tolerance, printer=self.printer)
            self._save("certification", certification)
        results["certification"] = certification.model_dump()
        self.display_manager.display_workflow_complete()

        if self.config.show_tables:
            self.display_manager.print_matrix("H", results["scheme"]["parity"])
            self.display_manager.print_access_structure(records)
            if reps is not None:
                self.display_manager.print_advance_reps(reps)
            self.display_manager.print_certification(certification)

        logger.info("%s %s: all passed = %s", self.command, self.config.name, certification.all_passed)
        return Report(command=self.command, inputs=self.config.inputs(), results=results, seed=self.seed)
