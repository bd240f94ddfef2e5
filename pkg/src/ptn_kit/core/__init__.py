"""Core components of ptn-kit."""

from .model import CharacterMatrix, LgtNetwork, Tree
from .recognition import explains_check, recognize
from .completion import complete, prune_transfers, reconstruct
from .storage import ReportStorage

__all__ = [
    "CharacterMatrix",
    "LgtNetwork",
    "Tree",
    "explains_check",
    "recognize",
    "complete",
    "prune_transfers",
    "reconstruct",
    "ReportStorage",
]
