"""
Services shared by the workflows and the CLI.

This module contains the helpers that persist reports, render them on the
console and read or write the plain-text code files.
"""

from .report_display_manager import ReportDisplayManager
from .report_data_manager import ReportDataManager

__all__ = [
    "ReportDisplayManager",
    "ReportDataManager",
]
