"""
ptn-kit Configuration Package.

This package provides configuration management for ptn-kit: defaults,
environment overrides, INI files and a read-only view of the result.
"""

from ptn_kit.config.config import Config, apply_config_file
from ptn_kit.config.config_manager import ConfigManager

__all__ = [
    "Config",
    "apply_config_file",
    "ConfigManager",
]
