"""Logging helpers.

All packages log through the standard ``logging`` module. The first call to
``get_logger`` attaches a single rich handler to the ``crcartan`` root so
console output is readable and goes to stderr, leaving stdout for reports.
"""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

from config import settings

_ROOT_NAME = "crcartan"
_CONFIGURED = False


def _configure_root() -> logging.Logger:
    global _CONFIGURED
    root = logging.getLogger(_ROOT_NAME)
    if not _CONFIGURED:
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        root.addHandler(handler)
        root.setLevel(settings.LOG_LEVEL.upper())
        root.propagate = False
        _CONFIGURED = True
    return root


def get_logger(name: str) -> logging.Logger:
    """Return a logger below the ``crcartan`` hierarchy for module ``name``."""
    _configure_root()
    return logging.getLogger(f"{_ROOT_NAME}.{name}")


def set_level(level: str) -> None:
    """Change the level of every crcartan logger (used by ``--verbose``)."""
    _configure_root().setLevel(level.upper())


__all__ = ["get_logger", "set_level"]
