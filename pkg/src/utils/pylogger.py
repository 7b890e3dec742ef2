import logging

from rich.console import Console
from rich.logging import RichHandler


def get_pylogger(name=__name__) -> logging.Logger:
    """Initializes python command line logger."""

    return logging.getLogger(name)


def setup_rich_logging(level: str = "INFO") -> None:
    """Routes log records to stderr through rich, so stdout only carries command output.

    Args:
        level (str, optional): Root logging level.
    """

    root = logging.getLogger()

    # calling twice (e.g. several commands in one test session) must not duplicate records
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)

    root.addHandler(
        RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
    )
    root.setLevel(level)
