import logging

from rich.logging import RichHandler

from app.core.config import config
from app.core.console_config import err_console

#logging_config.py
LOGGING_LEVEL = config.LOGGING_LEVEL


def setup_logging():
    """
    Set up the logging configuration.

    Log records go to stderr so that JSON reports on stdout stay parseable.
    """
    logging.basicConfig(
        level=LOGGING_LEVEL,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[
            RichHandler(
                console=err_console,
                rich_tracebacks=True,
                tracebacks_show_locals=True,
                markup=True,
                show_path=True,
                keywords=RichHandler.KEYWORDS
                + [
                    "C_S",
                    "C_R",
                    "C_max",
                    "Witt",
                    "RREF",
                ],
            )
        ],
    )

    # galois compiles its ufuncs through numba, which is noisy at DEBUG
    logging.getLogger("numba").setLevel(logging.WARNING)
    logging.getLogger("galois").setLevel(logging.WARNING)


# Initialize logging when this module is imported
setup_logging()


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance.

    Args:
        name: The name of the logger.

    Returns:
        A logger instance.
    """
    return logging.getLogger(name)
