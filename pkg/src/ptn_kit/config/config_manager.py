"""
Configuration manager for ptn-kit.

This module reports the effective configuration, where each value came from,
and can write the current settings out as an INI file.
"""

import os
import configparser
from pathlib import Path
from typing import Any, Dict, Optional

from click import echo, style

from oarc_utils.decorators import singleton

from ptn_kit.utils.paths import Paths
from ptn_kit.config.config import Config
from ptn_kit.utils.const import (
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
    CONFIG_SECTION,
)


@singleton
class ConfigManager:
    """Manager for ptn-kit configuration."""


    @classmethod
    def get_config_details(cls) -> Dict[str, Dict[str, Any]]:
        """
        Get configuration details including descriptions and types.

        Returns:
            Dictionary with configuration metadata
        """
        return {
            CONFIG_KEY_LOG_LEVEL: {
                "description": "Logging verbosity level",
                "type": "select",
                "options": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
            },
            CONFIG_KEY_THREADS: {
                "description": "Worker threads for per-character recognition and pruning checks",
                "type": "int",
                "range": (1, 64),
            },
            CONFIG_KEY_COLOR: {
                "description": "Colored terminal output",
                "type": "bool",
            },
            CONFIG_KEY_SEED: {
                "description": "Seed for randomized instance generation",
                "type": "int",
            },
            CONFIG_KEY_OUTPUT_DIR: {
                "description": "Directory that relative --out prefixes are resolved against",
                "type": "path",
            },
            CONFIG_KEY_ORACLE_MAX_NODES: {
                "description": "Largest network the exhaustive recognizer accepts",
                "type": "int",
            },
            CONFIG_KEY_ORACLE_MAX_LEAVES: {
                "description": "Largest tree the exhaustive completion search accepts",
                "type": "int",
            },
            CONFIG_KEY_ORACLE_MAX_TRANSFERS: {
                "description": "Largest transfer budget the exhaustive searches accept",
                "type": "int",
            },
            CONFIG_KEY_RECONSTRUCT_MAX_TAXA: {
                "description": "Largest taxon count the exhaustive reconstruction accepts",
                "type": "int",
            },
            CONFIG_KEY_MAX_K: {
                "description": "Largest character count for the worst-case generator",
                "type": "int",
            },
        }


    @classmethod
    def find_config_file(cls) -> Optional[Path]:
        """
        Find the configuration file in standard locations.

        Returns:
            Path to the first existing config file, or None
        """
        return Paths.find_config_file()


    @classmethod
    def get_current_config(cls) -> Dict[str, Any]:
        """
        Get current configuration values as display strings.

        Returns:
            Dictionary mapping every known config key to its value as a string
        """
        config = Config()
        return {key: str(config.get(key)) for key in config.DEFAULTS.keys()}


    @classmethod
    def get_config_source(cls) -> Dict[str, str]:
        """
        Determine the source for each configuration value.

        Returns:
            Dictionary mapping config keys to their sources (default, env var, config file)
        """
        result = {}
        config = Config()
        config_file = cls.find_config_file()
        parser = configparser.ConfigParser()
        if config_file:
            parser.read(config_file)

        for key in config.DEFAULTS.keys():
            source = "default"
            env_var = next((env for env, k in config.ENV_VARS.items() if k == key), None)
            if env_var and env_var in os.environ:
                source = f"environment variable ({env_var})"
            elif config_file and CONFIG_SECTION in parser and key in parser[CONFIG_SECTION]:
                source = f"config file ({config_file})"
            result[key] = source

        return result


    @classmethod
    def create_config_file(cls, config_path: Path, force: bool = False) -> bool:
        """
        Create a new configuration file with current settings.

        Args:
            config_path: Path where the config file should be created
            force: Whether to overwrite if the file already exists

        Returns:
            True if the file was created, False otherwise
        """
        if config_path.exists() and not force:
            return False

        parser = configparser.ConfigParser()
        parser[CONFIG_SECTION] = cls.get_current_config()

        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, 'w') as f:
            parser.write(f)

        return True


    @classmethod
    def display_config_info(cls, color: Optional[bool] = None) -> None:
        """
        Display the effective configuration with sources and descriptions.

        Args:
            color: Passed to click.echo; None detects a terminal, False strips styles
        """
        config_file = cls.find_config_file()
        if config_file:
            echo(style(f"Found config file: {config_file}", fg='green'), color=color)
        else:
            echo(style("No config file found, using defaults and environment variables", fg='yellow'),
                 color=color)

        echo("\nCurrent configuration:")
        echo(style("─" * 50, fg='blue'), color=color)

        current_config = cls.get_current_config()
        sources = cls.get_config_source()
        config_details = cls.get_config_details()

        for key, value in current_config.items():
            source = sources.get(key, "unknown")
            description = config_details.get(key, {}).get("description", "")

            echo(f"{style(key, fg='green', bold=True)}: {value}", color=color)
            echo(f"  {style('Source:', fg='blue')} {source}", color=color)
            if description:
                echo(f"  {style('Description:', fg='blue')} {description}", color=color)
            echo("")
