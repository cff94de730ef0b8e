"""Check the set up of the logging."""

import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

from cogniq.util.log_manager import (
    RESET,
    LogFormatter,
    get_package_version,
    set_up_logging,
)


@pytest.fixture(autouse=True)
def restore_logging() -> Iterator[None]:
    """Remove the handlers installed during the test."""
    yield
    for handler in logging.root.handlers[:]:
        handler.close()
        logging.root.removeHandler(handler)


@pytest.mark.smoke
class TestSetUpLogging:
    """Console and file handlers."""

    def test_console_only(self) -> None:
        """A single handler, on standard error."""
        assert set_up_logging(console_log_level="info")
        assert len(logging.root.handlers) == 1

    def test_log_file(self, tmp_path: Path) -> None:
        """The file receives the header and the messages."""
        log_file = tmp_path / "cogniq.log"
        assert set_up_logging(logfile_file=log_file)
        logging.info("hello")
        for handler in logging.root.handlers:
            handler.flush()
        content = log_file.read_text()
        assert "Starting log for CogniQ" in content
        assert "hello" in content

    def test_unwritable_file(self, tmp_path: Path) -> None:
        """A log file in a missing folder is reported, not raised."""
        log_file = tmp_path / "missing" / "cogniq.log"
        assert not set_up_logging(logfile_file=log_file)

    def test_version(self) -> None:
        """A version is always given."""
        assert isinstance(get_package_version(), str)


@pytest.mark.smoke
class TestLogFormatter:
    """Colored and plain output."""

    @staticmethod
    def _record(level: int) -> logging.LogRecord:
        return logging.LogRecord("x", level, "f.py", 1, "msg", None, None)

    def test_color(self) -> None:
        """Escape sequences surround the colored part."""
        formatter = LogFormatter(
            color=True, fmt="%(color_on)s%(message)s%(color_off)s"
        )
        obtained = formatter.format(self._record(logging.ERROR))
        assert obtained == "\033[1;31mmsg" + RESET, f"{obtained = }"

    def test_no_color(self) -> None:
        """Nothing is added when colors are disabled."""
        formatter = LogFormatter(
            color=False, fmt="%(color_on)s%(message)s%(color_off)s"
        )
        obtained = formatter.format(self._record(logging.ERROR))
        assert obtained == "msg", f"{obtained = }"

    def test_console_not_a_terminal(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """A captured console is never colored."""
        set_up_logging(console_log_level="warning")
        logging.warning("plain")
        obtained = capsys.readouterr().err
        assert "\033[" not in obtained, f"{obtained = }"
        assert "plain" in obtained
