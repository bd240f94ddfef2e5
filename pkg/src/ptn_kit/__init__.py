"""ptn-kit - perfect transfer networks: recognition, completion, bounds and oracles."""

__version__ = "0.1.0"
__author__ = "OARC Team"

from ptn_kit.core.model import CharacterMatrix, LgtNetwork, Tree
from ptn_kit.core.recognition import explains_check, recognize
from ptn_kit.core.completion import complete, prune_transfers, reconstruct
from ptn_kit.core.storage import ReportStorage

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
