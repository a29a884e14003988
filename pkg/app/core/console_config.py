"""
Console configuration for the advance-sharing toolkit.

`console` renders reports and tables on stdout; `err_console` carries progress
spinners and log records on stderr so machine-readable output is never mixed
with status updates.
"""
from rich.console import Console

console = Console()
err_console = Console(stderr=True)
