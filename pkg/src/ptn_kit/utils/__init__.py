"""
Utilities for ptn-kit.

This module provides paths, constants, errors and random instance generators
used throughout the package.
"""

from .paths import Paths

__all__ = [
    "Paths",
]
