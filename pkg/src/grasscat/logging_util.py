"""Logging for grasscat.

Everything goes to stderr (and optionally a file); stdout is reserved for
command output, which must be byte-identical between runs.
"""

import logging
import re
import sys
from datetime import datetime
from pathlib import Path
from typing import Any

from .constants import LOG_FORMAT, LOG_LEVELS
from .exceptions import ConfigurationError

# Only \w+ names match, so arc sets such as {1,4} pass through untouched.
_PLACEHOLDER = re.compile(r"\{(\w+)\}")


def _coerce_level(level: int | str) -> int:
    if isinstance(level, int):
        return level
    name = level.upper()
    if name not in LOG_LEVELS:
        raise ConfigurationError("log_level", f"Unknown level '{level}'")
    value: int = getattr(logging, name)
    return value


class GCLogger:
    """Wrapper around the ``grasscat`` stdlib logger.

    Messages and log file paths may use the placeholders {today}, {now},
    {date}, {time} and {command}. Unknown placeholders are left as they are.
    """

    def __init__(
        self,
        name: str = "grasscat",
        level: int | str = logging.WARNING,
        log_path: str | None = None,
        command: str | None = None,
    ):
        """Initialize the logger.

        Args:
            name: Name of the stdlib logger to wrap
            level: Level as a number or a name such as "INFO"
            log_path: File or directory pattern; None logs to stderr only
            command: Running subcommand, substituted for {command}
        """
        self._level = _coerce_level(level)
        self._command = command or "grasscat"
        self._file_handler: logging.FileHandler | None = None

        self._logger = logging.getLogger(name)
        self._logger.propagate = False
        if not self._logger.handlers:
            console = logging.StreamHandler(sys.stderr)
            console.setFormatter(logging.Formatter(LOG_FORMAT))
            self._logger.addHandler(console)
        self._apply_level()

        if log_path:
            self._attach_file(log_path)

    @property
    def level(self) -> int:
        return self._level

    @property
    def command(self) -> str:
        return self._command

    @property
    def log_file(self) -> Path | None:
        """Resolved path of the current log file, if any."""
        if self._file_handler is None:
            return None
        return Path(self._file_handler.baseFilename)

    def placeholders(self) -> dict[str, str]:
        now = datetime.now()
        return {
            "today": now.strftime("%Y-%m-%d"),
            "date": now.strftime("%Y-%m-%d"),
            "time": now.strftime("%H-%M-%S"),
            "now": now.strftime("%Y-%m-%d_%H-%M-%S"),
            "command": self._command,
        }

    def substitute_placeholders(self, text: str, extra: dict[str, Any] | None = None) -> str:
        """Replace known {name} placeholders in text.

        Args:
            text: Text possibly containing placeholders
            extra: Additional placeholder values, overriding the built-in ones

        Returns:
            The substituted text
        """
        values = self.placeholders()
        if extra:
            values.update({str(k): str(v) for k, v in extra.items()})
        return _PLACEHOLDER.sub(lambda m: values.get(m.group(1), m.group(0)), text)

    def _attach_file(self, pattern: str) -> None:
        self._detach_file()
        target = Path(self.substitute_placeholders(pattern))
        if target.is_dir() or pattern.endswith(("/", "\\")):
            target.mkdir(parents=True, exist_ok=True)
            target = target / self.substitute_placeholders("grasscat_{command}_{now}.log")
        else:
            target.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(target, encoding="utf-8")
        handler.setLevel(self._level)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        self._logger.addHandler(handler)
        self._file_handler = handler

    def _detach_file(self) -> None:
        if self._file_handler is not None:
            self._logger.removeHandler(self._file_handler)
            self._file_handler.close()
            self._file_handler = None

    def _apply_level(self) -> None:
        self._logger.setLevel(self._level)
        for handler in self._logger.handlers:
            handler.setLevel(self._level)

    def close(self) -> None:
        """Detach and close the log file, keeping console output."""
        self._detach_file()

    def log(self, level: int, msg: str, *args: Any, **kwargs: Any) -> None:
        if self._logger.isEnabledFor(level):
            self._logger.log(level, self.substitute_placeholders(msg), *args, **kwargs)

    def debug(self, msg: str, *args: Any, **kwargs: Any) -> None:
        self.log(logging.DEBUG, msg, *args, **kwargs)

    def info(self, msg: str, *args: Any, **kwargs: Any) -> None:
        self.log(logging.INFO, msg, *args, **kwargs)

    def warning(self, msg: str, *args: Any, **kwargs: Any) -> None:
        self.log(logging.WARNING, msg, *args, **kwargs)

    def error(self, msg: str, *args: Any, **kwargs: Any) -> None:
        self.log(logging.ERROR, msg, *args, **kwargs)


# Global logger instance
_logger: GCLogger | None = None


def get_logger() -> GCLogger:
    """Return the global logger, creating a WARNING-level one on first use."""
    global _logger
    if _logger is None:
        _logger = GCLogger()
    return _logger


def init_logger(
    name: str = "grasscat",
    level: int | str = logging.WARNING,
    log_path: str | None = None,
    command: str | None = None,
) -> GCLogger:
    """Replace the global logger.

    Args:
        name: Name of the stdlib logger to wrap
        level: Level as a number or a name
        log_path: File or directory pattern for a log file
        command: Running subcommand

    Returns:
        The new global GCLogger
    """
    global _logger
    if _logger is not None:
        _logger.close()
    _logger = GCLogger(name=name, level=level, log_path=log_path, command=command)
    return _logger


def reset_logger() -> None:
    """Drop the global logger (mainly for testing)."""
    global _logger
    if _logger is not None:
        _logger.close()
    _logger = None
