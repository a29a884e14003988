from __future__ import annotations

import json
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError
from slugify import slugify

from app.core.logging_config import get_logger
from app.core.printer import Printer

T = TypeVar("T", bound=BaseModel)

logger = get_logger(__name__)


class ReportDataManager:
    """
    Persists reports and workflow phase results as ``<data_dir>/<slug>/<phase>.json``.
    """

    def __init__(self, data_dir: Path, printer: Printer | None = None):
        self.data_dir = data_dir
        self.printer = printer
        self.data_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def slug_for(*parts: Any) -> str:
        """Directory slug for a run, e.g. ``slug_for("table1", 5, 2, 1)`` -> ``table1-5-2-1``."""
        return slugify(" ".join(str(p) for p in parts))

    def path_for(self, slug: str, phase: str) -> Path:
        return self.data_dir / slug / f"{phase}.json"

    def save_data(self, slug: str, phase: str, data: BaseModel | dict | list | None) -> Path | None:
        """Write ``data`` with stable formatting; None is skipped."""
        if data is None:
            return None

        file_path = self.path_for(slug, phase)
        file_path.parent.mkdir(parents=True, exist_ok=True)

        with open(file_path, "w", encoding="utf-8") as f:
            if isinstance(data, BaseModel):
                f.write(data.model_dump_json(indent=2))
            else:
                json.dump(data, f, indent=2, ensure_ascii=False)
            f.write("\n")
        logger.debug("Saved %s/%s to %s", slug, phase, file_path)
        return file_path

    def load_data(self, slug: str, phase: str, output_model: type[T] | None = None) -> T | dict | list | None:
        """Read a saved phase; unreadable or invalid files give None so the phase reruns."""
        file_path = self.path_for(slug, phase)

        if not file_path.exists():
            return None

        try:
            with open(file_path, "r", encoding="utf-8") as f:
                content = json.load(f)
            if output_model is not None:
                return output_model.model_validate(content)
            return content
        except (json.JSONDecodeError, ValidationError, OSError) as exc:
            logger.warning("Discarding saved %s/%s: %s", slug, phase, exc)
            if self.printer:
                self.printer.update_item(
                    f"load_error_{phase}",
                    f"⚠️ Saved {phase} is unreadable - will recompute",
                    is_done=True,
                    hide_checkmark=True,
                )
            return None

    def has_cached_data(self, slug: str, phase: str) -> bool:
        return self.path_for(slug, phase).exists()

    def clear_cache(self, slug: str, phase: str | None = None) -> None:
        """Remove one saved phase, or every phase of the run."""
        run_dir = self.data_dir / slug

        if not run_dir.exists():
            return

        if phase:
            file_path = run_dir / f"{phase}.json"
            if file_path.exists():
                file_path.unlink()
        else:
            for file_path in run_dir.glob("*.json"):
                file_path.unlink()
        if not any(run_dir.iterdir()):
            run_dir.rmdir()
