"""Configuration management for grasscat."""

import logging
import os
from pathlib import Path
from typing import Any

import yaml

from .constants import (
    CONFIG_FILE,
    DEFAULT_FRIEZE_FORMAT,
    DEFAULT_LOG_LEVEL,
    DEFAULT_NMAX,
    DEFAULT_QUIVER_FORMAT,
    FRIEZE_FORMATS,
    LOG_LEVELS,
    NMAX_LOWER,
    NMAX_UPPER,
    NO_COLOR_ENV,
    QUIVER_FORMATS,
)
from .exceptions import ConfigurationError


class GCConfig:
    """Configuration manager for grasscat.

    Values resolve as: explicit argument, then the YAML settings file, then
    the built-in default. The settings file is optional; unknown keys are
    ignored.

    Example grasscat.yaml::

        log_level: INFO
        log_path: logs/{command}_{today}.log
        verify:
          nmax: 7
        formats:
          quiver: dot
          frieze: json
    """

    def __init__(
        self,
        config_path: str | Path | None = None,
        log_path: str | None = None,
        log_level: str | None = None,
    ):
        """Initialize configuration.

        Args:
            config_path: Path to the YAML settings file (optional)
            log_path: Log file path pattern (optional)
            log_level: Logging level name (optional)
        """
        self._config_path = Path(config_path) if config_path else None
        self._log_path = log_path
        self._log_level = log_level
        self._settings: dict[str, Any] | None = None

    @property
    def config_path(self) -> Path:
        """Return the settings file path.

        Resolution order:
        1. Explicitly set path
        2. Default: ./grasscat.yaml
        """
        if self._config_path:
            return self._config_path
        return Path(CONFIG_FILE)

    def load_settings(self) -> dict[str, Any]:
        """Load settings from the YAML file.

        Returns:
            Settings dictionary (empty if the file does not exist)

        Raises:
            ConfigurationError: If settings file cannot be loaded
        """
        if self._settings is not None:
            return self._settings

        if not self.config_path.exists():
            if self._config_path is not None:
                raise ConfigurationError(str(self.config_path), "File does not exist")
            self._settings = {}
            return self._settings

        try:
            with open(self.config_path, encoding="utf-8") as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(
                str(self.config_path),
                f"Failed to parse YAML: {e}",
            )
        except OSError as e:
            raise ConfigurationError(
                str(self.config_path),
                f"Failed to read file: {e}",
            )

        if not isinstance(loaded, dict):
            raise ConfigurationError(str(self.config_path), "Top level must be a mapping")
        self._settings = loaded
        return self._settings

    def get_setting(self, key: str, default: Any = None) -> Any:
        """Get a setting value.

        Args:
            key: Setting key (supports dot notation for nested keys)
            default: Default value if not found

        Returns:
            Setting value or default
        """
        current: Any = self.load_settings()
        for k in key.split("."):
            if not isinstance(current, dict) or k not in current:
                return default
            current = current[k]
        return current

    @property
    def log_path(self) -> str | None:
        """Return the log path pattern, or None for console-only logging."""
        if self._log_path:
            return self._log_path
        value = self.get_setting("log_path")
        return str(value) if value else None

    @property
    def log_level(self) -> int:
        """Return the numeric logging level.

        Raises:
            ConfigurationError: If the level name is not recognized
        """
        name = self._log_level or self.get_setting("log_level", DEFAULT_LOG_LEVEL)
        name = str(name).upper()
        if name not in LOG_LEVELS:
            raise ConfigurationError("log_level", f"Unknown level '{name}'")
        level: int = getattr(logging, name)
        return level

    @property
    def nmax_default(self) -> int:
        """Return the default sweep bound for ``verify``.

        Raises:
            ConfigurationError: If the configured bound is out of range
        """
        value = self.get_setting("verify.nmax", DEFAULT_NMAX)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigurationError("verify.nmax", f"Expected an integer, got {value!r}")
        if not NMAX_LOWER <= value <= NMAX_UPPER:
            raise ConfigurationError(
                "verify.nmax", f"Must lie in [{NMAX_LOWER}, {NMAX_UPPER}], got {value}"
            )
        return value

    @property
    def quiver_format(self) -> str:
        """Return the default serialization for AR quivers."""
        return self._choice("formats.quiver", DEFAULT_QUIVER_FORMAT, QUIVER_FORMATS)

    @property
    def frieze_format(self) -> str:
        """Return the default serialization for friezes."""
        return self._choice("formats.frieze", DEFAULT_FRIEZE_FORMAT, FRIEZE_FORMATS)

    @property
    def no_color(self) -> bool:
        """Return whether coloured output is disabled via NO_COLOR."""
        return bool(os.getenv(NO_COLOR_ENV))

    def _choice(self, key: str, default: str, choices: list[str]) -> str:
        value = str(self.get_setting(key, default))
        if value not in choices:
            raise ConfigurationError(key, f"Expected one of {choices}, got '{value}'")
        return value


# Global configuration instance
_config: GCConfig | None = None


def get_config() -> GCConfig:
    """Get the global configuration instance.

    Returns:
        Global GCConfig instance
    """
    global _config
    if _config is None:
        _config = GCConfig()
    return _config


def init_config(
    config_path: str | Path | None = None,
    log_path: str | None = None,
    log_level: str | None = None,
) -> GCConfig:
    """Initialize the global configuration.

    Args:
        config_path: Path to the YAML settings file
        log_path: Log file path pattern
        log_level: Logging level name

    Returns:
        Initialized GCConfig instance
    """
    global _config
    _config = GCConfig(
        config_path=config_path,
        log_path=log_path,
        log_level=log_level,
    )
    return _config


def reset_config() -> None:
    """Reset the global configuration (mainly for testing)."""
    global _config
    _config = None
