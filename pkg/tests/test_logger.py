"""
Test suite for the curvemoduli.logger module.
"""

import logging

import pytest

from curvemoduli.logger import LEVEL_ENV, LevelFormatter, build_logger, level_from_env, logger


class TestLogger:
    """Test cases for the central logger."""

    @pytest.mark.parametrize(
        "raw, expected",
        [("debug", logging.DEBUG), (" Warning ", logging.WARNING), ("nonsense", logging.INFO), ("", logging.INFO)],
    )
    def test_level_from_env(self, monkeypatch, raw, expected):
        """Test that the level is read from the environment."""
        monkeypatch.setenv(LEVEL_ENV, raw)
        assert level_from_env() == expected

    def test_single_handler(self):
        """Test that building the logger twice does not duplicate handlers."""
        assert build_logger() is logger
        assert len(logger.handlers) == 1

    def test_colors_only_when_asked(self):
        """Test plain and colored formatting."""
        record = logging.LogRecord("CurveModuli", logging.ERROR, __file__, 1, "bad input", None, None)
        plain = LevelFormatter(colored=False).format(record)
        assert plain.startswith("[ERROR]") and plain.endswith("bad input")
        colored = LevelFormatter(colored=True).format(record)
        assert colored.startswith("\033[91m") and colored.endswith("\033[0m")
