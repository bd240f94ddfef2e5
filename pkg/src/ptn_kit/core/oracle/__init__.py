"""Exhaustive reference implementations for toy-scale verification."""

from ptn_kit.core.oracle.exhaustive_completion import (
    OracleSolution,
    enumerate_trees,
    min_completion_exhaustive,
    min_reconstruction_exhaustive,
    place_transfers,
    placements,
)
from ptn_kit.core.oracle.exhaustive_recognition import (
    explain_character_exhaustive,
    recognize_exhaustive,
)
from ptn_kit.core.oracle.gap import GapReport, gap_distribution

__all__ = [
    "OracleSolution",
    "enumerate_trees",
    "min_completion_exhaustive",
    "min_reconstruction_exhaustive",
    "place_transfers",
    "placements",
    "explain_character_exhaustive",
    "recognize_exhaustive",
    "GapReport",
    "gap_distribution",
]
