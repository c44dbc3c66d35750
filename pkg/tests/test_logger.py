"""Tests for the console and file log formatting."""

import io
import logging
import sys

import pytest

from utils.logger import ColoredFormatter, get_logger, setup_logger


def _record(level=logging.WARNING):
    return logging.LogRecord("landau.radial", level, __file__, 1, "tail is heavy", None, None)


@pytest.fixture
def fresh_logger(monkeypatch):
    monkeypatch.setattr(sys, "stderr", io.StringIO())
    logger = setup_logger("landau-test", level="DEBUG")
    yield logger
    logger.handlers.clear()


class TestColoredFormatter:

    def test_plain_when_not_a_terminal(self):
        text = ColoredFormatter("%(levelname)s %(message)s", use_color=False).format(_record())
        assert text == "WARNING tail is heavy"

    def test_coloured_level(self):
        text = ColoredFormatter("%(levelname)s %(message)s").format(_record())
        assert text.startswith(ColoredFormatter.LEVEL_COLORS["WARNING"] + "WARNING" + ColoredFormatter.RESET)

    def test_record_left_untouched(self):
        record = _record(logging.ERROR)
        ColoredFormatter("%(levelname)s").format(record)
        assert record.levelname == "ERROR"


class TestSetupLogger:

    def test_redirected_stderr_is_uncoloured(self, fresh_logger):
        formatter = fresh_logger.handlers[0].formatter
        assert isinstance(formatter, ColoredFormatter)
        assert formatter.use_color is False

    def test_file_handler(self, tmp_path):
        path = tmp_path / "logs" / "run.log"
        logger = setup_logger("landau-file", level="INFO", log_file=str(path))
        logger.info("normalized")
        for handler in logger.handlers:
            handler.close()
        logger.handlers.clear()
        assert "normalized" in path.read_text()

    def test_child_names(self):
        assert get_logger("oracle").name == "landau.oracle"
        assert get_logger("landau.spinor").name == "landau.spinor"
