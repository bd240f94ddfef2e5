"""
Configuration management for ptn-kit.

This module provides a centralized configuration system that handles defaults,
environment variable overrides, INI files and runtime overrides from the CLI.
"""

import os
import configparser
import pathlib
from typing import Any, Dict, Optional

from oarc_log import log
from oarc_utils.decorators import singleton

from ptn_kit.utils.paths import Paths
from ptn_kit.utils.const import (
    CONFIG_SECTION,
    CONFIG_KEY_COLOR,
    CONFIG_KEY_LOG_LEVEL,
    CONFIG_KEY_MAX_K,
    CONFIG_KEY_ORACLE_MAX_LEAVES,
    CONFIG_KEY_ORACLE_MAX_NODES,
    CONFIG_KEY_ORACLE_MAX_TRANSFERS,
    CONFIG_KEY_OUTPUT_DIR,
    CONFIG_KEY_RECONSTRUCT_MAX_TAXA,
    CONFIG_KEY_SEED,
    CONFIG_KEY_THREADS,
    DEFAULT_COLOR,
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_K,
    DEFAULT_ORACLE_MAX_LEAVES,
    DEFAULT_ORACLE_MAX_NODES,
    DEFAULT_ORACLE_MAX_TRANSFERS,
    DEFAULT_RECONSTRUCT_MAX_TAXA,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    ENV_COLOR,
    ENV_LOG_LEVEL,
    ENV_OUTPUT_DIR,
    ENV_SEED,
    ENV_THREADS,
)

@singleton
class Config:
    """
    Singleton configuration manager for ptn-kit.

    Values are resolved in this order, later sources winning:
      - built-in defaults
      - environment variables (PTNKIT_*)
      - the first INI file found in the default locations
      - an explicit --config file, and CLI options such as --threads

    Examples:
      Get configuration value:
        $ threads = Config().threads

      Set configuration value:
        $ Config.set(CONFIG_KEY_THREADS, 4)
    """

    DEFAULTS = {
        CONFIG_KEY_LOG_LEVEL: DEFAULT_LOG_LEVEL,
        CONFIG_KEY_THREADS: DEFAULT_THREADS,
        CONFIG_KEY_COLOR: DEFAULT_COLOR,
        CONFIG_KEY_SEED: DEFAULT_SEED,
        CONFIG_KEY_OUTPUT_DIR: str(Paths.get_default_output_dir()),
        CONFIG_KEY_ORACLE_MAX_NODES: DEFAULT_ORACLE_MAX_NODES,
        CONFIG_KEY_ORACLE_MAX_LEAVES: DEFAULT_ORACLE_MAX_LEAVES,
        CONFIG_KEY_ORACLE_MAX_TRANSFERS: DEFAULT_ORACLE_MAX_TRANSFERS,
        CONFIG_KEY_RECONSTRUCT_MAX_TAXA: DEFAULT_RECONSTRUCT_MAX_TAXA,
        CONFIG_KEY_MAX_K: DEFAULT_MAX_K,
    }

    # Environment variable mappings (ENV_VAR_NAME: config_key)
    ENV_VARS = {
        ENV_LOG_LEVEL: CONFIG_KEY_LOG_LEVEL,
        ENV_THREADS: CONFIG_KEY_THREADS,
        ENV_COLOR: CONFIG_KEY_COLOR,
        ENV_SEED: CONFIG_KEY_SEED,
        ENV_OUTPUT_DIR: CONFIG_KEY_OUTPUT_DIR,
    }

    _config: Dict[str, Any] = {}


    def __init__(self):
        """Initialize configuration if not already done."""
        if not hasattr(self, '_init_done'):
            self.initialize()
            self._init_done = True


    @classmethod
    def initialize(cls) -> None:
        """
        Initialize configuration with defaults, environment overrides, and config file.
        """
        cls._config = {}
        cls._config.update(cls.DEFAULTS)

        for env_var, config_key in cls.ENV_VARS.items():
            if env_var in os.environ:
                cls._config[config_key] = cls._parse_value(os.environ[env_var], cls.DEFAULTS[config_key])

        cls._load_from_config_file()
        cls._config[CONFIG_KEY_OUTPUT_DIR] = pathlib.Path(cls._config[CONFIG_KEY_OUTPUT_DIR]).resolve()

        log.debug(f"Initialized Config with: {cls._config}")


    @classmethod
    def _parse_value(cls, value: str, default: Any) -> Any:
        """
        Parse a string value into the type of its default.

        Args:
            value: The string value to parse
            default: The default value to determine the type

        Returns:
            The parsed value with the appropriate type
        """
        if isinstance(default, bool):
            return value.strip().lower() in ("yes", "true", "t", "1", "y")
        elif isinstance(default, int):
            try:
                return int(value)
            except (ValueError, TypeError):
                log.warning(f"Could not parse '{value}' as int, using default {default}")
                return default
        return value


    @classmethod
    def _load_from_config_file(cls, config_file: Optional[str] = None) -> None:
        """
        Load configuration settings from an INI file.

        If config_file is given and exists it is used, otherwise the first
        file found in the default locations.

        Args:
            config_file: Optional path to a specific INI file
        """
        parser = configparser.ConfigParser()

        if config_file and pathlib.Path(config_file).exists():
            parser.read(config_file)
            if CONFIG_SECTION in parser:
                log.debug(f"Loading config from specified file: {config_file}")
                cls._update_from_config_section(parser[CONFIG_SECTION])
            return

        for path in Paths.get_default_config_locations():
            if path.exists():
                parser.read(path)
                if CONFIG_SECTION in parser:
                    log.debug(f"Loading config from default location: {path}")
                    cls._update_from_config_section(parser[CONFIG_SECTION])
                    break


    @classmethod
    def _update_from_config_section(cls, section) -> None:
        """
        Update known keys from a configparser section.

        Args:
            section: The [ptn-kit] section of a parsed INI file
        """
        for key in cls.DEFAULTS.keys():
            if key in section:
                cls._config[key] = cls._parse_value(section[key], cls.DEFAULTS[key])

        if isinstance(cls._config.get(CONFIG_KEY_OUTPUT_DIR), str):
            cls._config[CONFIG_KEY_OUTPUT_DIR] = pathlib.Path(cls._config[CONFIG_KEY_OUTPUT_DIR]).resolve()


    @classmethod
    def load_from_file(cls, config_file: str) -> None:
        """
        Load configuration from a specific file.

        Args:
            config_file: Path to the config file to load.
        """
        log.debug(f"Explicitly loading config from: {config_file}")
        cls._load_from_config_file(config_file)


    @classmethod
    def apply_config_file(cls, ctx=None, param=None, value=None) -> Any:
        """
        Load configuration from a file if specified.

        Usable directly and as a Click callback for the --config option.

        Args:
            ctx: The click context (optional, for callback usage)
            param: The parameter being processed (optional, for callback usage)
            value: The parameter value (path to config file or None)

        Returns:
            The parameter value if used as callback, otherwise None
        """
        if value is None:
            return value

        if not cls._config:
            cls.initialize()

        cls.load_from_file(value)
        log.debug(f"Applied configuration from file: {value}")

        if ctx is not None:
            return value
        return None


    @classmethod
    def apply_option(cls, key: str):
        """
        Build a Click callback that stores a non-None option value under ``key``.

        Used for --threads and --seed on the root group.

        Args:
            key: Configuration key the option value is stored under

        Returns:
            A callback with the (ctx, param, value) signature Click expects
        """
        def callback(ctx, param, value):
            if value is not None:
                if not cls._config:
                    cls.initialize()
                cls.set(key, value)
            return value
        return callback


    @property
    def log_level(self) -> str:
        """Get the configured log level."""
        return self._config[CONFIG_KEY_LOG_LEVEL]

    @property
    def threads(self) -> int:
        """Upper bound on worker threads used by recognition and pruning."""
        return max(1, int(self._config[CONFIG_KEY_THREADS]))

    @property
    def color(self) -> bool:
        """Whether CLI output is colored."""
        return bool(self._config[CONFIG_KEY_COLOR])

    @property
    def seed(self) -> int:
        """Seed for randomized instance generation."""
        return int(self._config[CONFIG_KEY_SEED])

    @property
    def output_dir(self) -> pathlib.Path:
        """Directory relative output prefixes are resolved against."""
        return self._config[CONFIG_KEY_OUTPUT_DIR]

    @property
    def oracle_max_nodes(self) -> int:
        return int(self._config[CONFIG_KEY_ORACLE_MAX_NODES])

    @property
    def oracle_max_leaves(self) -> int:
        return int(self._config[CONFIG_KEY_ORACLE_MAX_LEAVES])

    @property
    def oracle_max_transfers(self) -> int:
        return int(self._config[CONFIG_KEY_ORACLE_MAX_TRANSFERS])

    @property
    def reconstruct_max_taxa(self) -> int:
        return int(self._config[CONFIG_KEY_RECONSTRUCT_MAX_TAXA])

    @property
    def max_k(self) -> int:
        return int(self._config[CONFIG_KEY_MAX_K])

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by key.

        Args:
            key: The configuration key
            default: Returned when the key is not set

        Returns:
            The configured value or default
        """
        return cls._config.get(key, default)

    @classmethod
    def set(cls, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: The configuration key
            value: The new value; output_dir is resolved to an absolute path
        """
        cls._config[key] = value
        log.debug(f"Set config {key}={value}")

        if key == CONFIG_KEY_OUTPUT_DIR:
            cls._config[CONFIG_KEY_OUTPUT_DIR] = pathlib.Path(value).resolve()


# Export commonly used functions
apply_config_file = Config.apply_config_file
load_from_file = Config.load_from_file
