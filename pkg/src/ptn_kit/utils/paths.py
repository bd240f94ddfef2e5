"""
Path utility functions for ptn-kit.

This module provides config-file discovery and the helpers used to turn an
``--out PREFIX`` option into the family of artifact paths a command writes.
"""

import os
import pathlib
from typing import List, Optional, Tuple, Union

from oarc_log import log
from oarc_utils.decorators import singleton

from ptn_kit.utils.const import (
    CONFIG_DIR,
    DEFAULT_CONFIG_FILENAME,
    ENV_HOME_DIR,
    ENV_OUTPUT_DIR,
    PTNKIT_DIR,
)

PathLike = Union[str, pathlib.Path]


@singleton
class Paths:
    """
    Utility class for path management in ptn-kit.
    """


    @staticmethod
    def ensure_path(path: PathLike) -> pathlib.Path:
        """
        Ensure a directory exists and return it.

        Args:
            path: The directory to ensure exists

        Returns:
            Path: The ensured path
        """
        path_obj = pathlib.Path(path)
        path_obj.mkdir(parents=True, exist_ok=True)
        return path_obj


    @staticmethod
    def get_ptnkit_home_dir() -> pathlib.Path:
        """
        Get the ptn-kit home directory.

        Uses the PTNKIT_HOME_DIR environment variable if set,
        otherwise defaults to the user's home directory.
        """
        if ENV_HOME_DIR in os.environ:
            return pathlib.Path(os.environ[ENV_HOME_DIR]).resolve()
        return pathlib.Path.home()


    @staticmethod
    def get_ptnkit_dir() -> pathlib.Path:
        """Get the .ptnkit directory."""
        return Paths.get_ptnkit_home_dir() / PTNKIT_DIR


    @staticmethod
    def get_default_output_dir() -> pathlib.Path:
        """Directory that relative output prefixes are resolved against."""
        if ENV_OUTPUT_DIR in os.environ:
            return pathlib.Path(os.environ[ENV_OUTPUT_DIR]).resolve()
        return pathlib.Path.cwd()


    @staticmethod
    def ensure_parent_dir(path: PathLike) -> Tuple[bool, str]:
        """
        Ensure the parent directory of a path exists.

        Returns:
            Tuple[bool, str]: Success status and error message (if any)
        """
        try:
            parent_dir = os.path.dirname(str(path))
            if parent_dir:
                Paths.ensure_path(parent_dir)
            return True, ""
        except (PermissionError, OSError) as e:
            return False, str(e)


    @staticmethod
    def file_exists(file_path: PathLike) -> bool:
        """Check if a file exists."""
        return os.path.exists(str(file_path))


    @staticmethod
    def artifact_path(prefix: PathLike, suffix: str, base_dir: Optional[PathLike] = None) -> pathlib.Path:
        """
        Build the path of one artifact from an output prefix.

        Relative prefixes are resolved against ``base_dir`` (or the configured
        output directory).

        Args:
            prefix: The --out prefix given on the command line
            suffix: The artifact suffix, e.g. ".network"
            base_dir: Optional directory for relative prefixes

        Returns:
            Path: prefix + suffix
        """
        prefix_path = pathlib.Path(prefix)
        if not prefix_path.is_absolute():
            prefix_path = pathlib.Path(base_dir or Paths.get_default_output_dir()) / prefix_path
        path = prefix_path.with_name(prefix_path.name + suffix)
        log.debug(f"Artifact path for suffix {suffix}: {path}")
        return path


    @staticmethod
    def get_default_config_locations() -> List[pathlib.Path]:
        """Get the default locations where config files might exist."""
        return [
            pathlib.Path.cwd() / DEFAULT_CONFIG_FILENAME,
            Paths.get_ptnkit_dir() / CONFIG_DIR / DEFAULT_CONFIG_FILENAME,
        ]


    @staticmethod
    def find_config_file() -> Optional[pathlib.Path]:
        """Find a config file in the default locations."""
        for path in Paths.get_default_config_locations():
            if path.exists():
                return path
        return None
