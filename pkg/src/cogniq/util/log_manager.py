"""Set up the root logger: a console handler and an optional log file.

The console writes to standard error by default, so that the reports printed
on standard output can be piped to other tools. Colors are only applied when
the console is a terminal.

"""

import logging
import sys
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import TextIO

#: ANSI escape sequence of every level
LEVEL_COLORS = {
    logging.CRITICAL: "\033[1;35m",
    logging.ERROR: "\033[1;31m",
    logging.WARNING: "\033[1;33m",
    logging.INFO: "\033[0;37m",
    logging.DEBUG: "\033[1;30m",
}
RESET = "\033[0m"

CONSOLE_TEMPLATE = (
    "%(color_on)s[%(levelname)-8s] [%(filename)-20s]%(color_off)s %(message)s"
)
LOGFILE_TEMPLATE = (
    "%(color_on)s[%(asctime)s] [%(levelname)-8s] [%(filename)-20s]"
    "%(color_off)s %(message)s"
)


def get_package_version(package_name: str = "CogniQ") -> str:
    """Get the installed version of the package."""
    try:
        return version(package_name)
    except PackageNotFoundError:
        return "Unknown version"


class LogFormatter(logging.Formatter):
    """Add ``color_on`` and ``color_off`` fields to every record."""

    def __init__(self, color: bool, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.color = color

    def format(self, record: logging.LogRecord) -> str:
        color_on = LEVEL_COLORS.get(record.levelno, "") if self.color else ""
        record.color_on = color_on
        record.color_off = RESET if color_on else ""
        return super().format(record)


def _configure(
    handler: logging.Handler, level: str, color: bool, line_template: str
) -> logging.Handler:
    """Give ``handler`` its level and formatter."""
    handler.setLevel(level.upper())
    handler.setFormatter(LogFormatter(fmt=line_template, color=color))
    return handler


def _console_stream(output: str) -> TextIO:
    """Resolve ``"stdout"`` or ``"stderr"`` at call time."""
    return sys.stdout if output.lower() == "stdout" else sys.stderr


def set_up_logging(
    package_name: str = "CogniQ",
    console_log_output: str = "stderr",
    console_log_level: str = "WARNING",
    console_log_color: bool = True,
    console_log_line_template: str = CONSOLE_TEMPLATE,
    logfile_file: Path | None = None,
    logfile_log_level: str = "INFO",
    logfile_log_color: bool = False,
    logfile_line_template: str = LOGFILE_TEMPLATE,
) -> bool:
    """Replace the handlers of the root logger.

    Parameters
    ----------
    package_name : str, optional
        Name written in the header of the log file.
    console_log_output : str, optional
        ``"stdout"`` or ``"stderr"``.
    console_log_level : str, optional
        Minimum level shown in the console, case insensitive.
    console_log_color : bool, optional
        Color the console when it is a terminal.
    logfile_file : pathlib.Path | None, optional
        File where messages are appended. No file if None.

    Returns
    -------
    bool
        False if the log file was asked for but could not be opened.

    """
    for handler in logging.root.handlers[:]:
        handler.close()
        logging.root.removeHandler(handler)

    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)

    stream = _console_stream(console_log_output)
    is_tty = getattr(stream, "isatty", lambda: False)()
    logger.addHandler(
        _configure(
            logging.StreamHandler(stream),
            console_log_level,
            console_log_color and is_tty,
            console_log_line_template,
        )
    )
    if logfile_file is None:
        return True

    try:
        file_handler = logging.FileHandler(logfile_file, mode="a")
    except OSError as e:
        logging.error(f"Failed to set up log file {logfile_file}: {e}")
        return False
    logger.addHandler(
        _configure(
            file_handler,
            logfile_log_level,
            logfile_log_color,
            logfile_line_template,
        )
    )
    logger.info(
        f"Starting log for {package_name} - Version: "
        f"{get_package_version(package_name)}"
    )
    return True
