"""Graph data model: matrices, networks, labelings and time maps."""

from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import (
    Edge,
    LgtNetwork,
    NetworkBuilder,
    NodeId,
    NodeKind,
    Tree,
    as_tree,
    base_tree,
    build_network,
    build_tree,
    insert_transfer,
    reachable_set,
    support_tree,
)
from ptn_kit.core.model.labeling import CLabeling, TimeMap, format_time, parse_time
from ptn_kit.core.model.timing import Infeasible, check_time_consistency, is_time_consistent

__all__ = [
    "CharacterMatrix",
    "Edge",
    "LgtNetwork",
    "NetworkBuilder",
    "NodeId",
    "NodeKind",
    "Tree",
    "as_tree",
    "base_tree",
    "build_network",
    "build_tree",
    "insert_transfer",
    "reachable_set",
    "support_tree",
    "CLabeling",
    "TimeMap",
    "format_time",
    "parse_time",
    "Infeasible",
    "check_time_consistency",
    "is_time_consistent",
]
