"""
Diagnostics for curvemoduli.

Results are JSON on stdout, so every log record goes to stderr. The level
comes from CURVEMODULI_LOG_LEVEL and colors are used only on a terminal.
"""

import logging
import os
import sys

LEVEL_ENV = "CURVEMODULI_LOG_LEVEL"

RESET = "\033[0m"
LEVEL_COLORS = {
    "DEBUG": "\033[94m",
    "INFO": "\033[92m",
    "WARNING": "\033[93m",
    "ERROR": "\033[91m",
    "CRITICAL": "\033[95m",
}


class LevelFormatter(logging.Formatter):
    """Prefixes the level name and colors the record when asked to."""

    def __init__(self, colored: bool) -> None:
        super().__init__("[%(levelname)s] %(asctime)s - %(message)s", "%H:%M:%S")
        self.colored = colored

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        if not self.colored:
            return message
        return f"{LEVEL_COLORS.get(record.levelname, RESET)}{message}{RESET}"


def level_from_env(default: int = logging.INFO) -> int:
    """Unknown level names fall back to the default."""
    name = os.getenv(LEVEL_ENV, "").strip().upper()
    level = logging.getLevelName(name) if name else default
    return level if isinstance(level, int) else default


def build_logger(name: str = "CurveModuli") -> logging.Logger:
    built = logging.getLogger(name)
    built.setLevel(level_from_env())
    if not built.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(LevelFormatter(colored=sys.stderr.isatty()))
        built.addHandler(handler)
    return built


logger = build_logger()
