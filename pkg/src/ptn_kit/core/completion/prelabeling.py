"""
No-loss pre-labelings of a tree.

    fitch_labeling(tree, matrix)        c at v iff every leaf below v has c
    leaf_only_labeling(tree, matrix)    taxa at the leaves, nothing inside
    random_no_loss_labeling(...)        random subsets of the Fitch labeling
"""

from typing import Dict, FrozenSet

import numpy as np

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork, NodeId


def fitch_labeling(tree: LgtNetwork, matrix: CharacterMatrix) -> CLabeling:
    """Bottom-up intersection of the children's labels.

    Args:
        tree: The tree to label
        matrix: Character matrix over the tree's taxa

    Returns:
        The Fitch labeling, the largest no-loss labeling agreeing with the leaves

    Raises:
        SigmaMismatch: the tree's taxa differ from the matrix taxa
    """
    matrix.check_sigma(tree)
    labels: Dict[NodeId, FrozenSet[str]] = {}
    for v in tree.post_order():
        if v in tree.sigma:
            labels[v] = matrix.characters_of(tree.sigma[v])
        else:
            labels[v] = frozenset.intersection(*(labels[u] for u in tree.support_children(v)))
    log.debug(f"Fitch labeling of {tree!r}: root carries {len(labels[tree.root])} character(s)")
    return CLabeling(labels)


def leaf_only_labeling(tree: LgtNetwork, matrix: CharacterMatrix) -> CLabeling:
    """Leaves carry their character sets, internal nodes carry nothing."""
    matrix.check_sigma(tree)
    return CLabeling({
        v: matrix.characters_of(tree.sigma[v]) if v in tree.sigma else frozenset()
        for v in tree.nodes
    })


def random_no_loss_labeling(tree: LgtNetwork, matrix: CharacterMatrix,
                            rng: np.random.Generator, keep: float = 0.5) -> CLabeling:
    """Each internal node keeps every character common to its children with probability keep."""
    matrix.check_sigma(tree)
    labels: Dict[NodeId, FrozenSet[str]] = {}
    for v in tree.post_order():
        if v in tree.sigma:
            labels[v] = matrix.characters_of(tree.sigma[v])
            continue
        common = sorted(frozenset.intersection(*(labels[u] for u in tree.support_children(v))))
        draws = rng.random(len(common))
        labels[v] = frozenset(c for c, x in zip(common, draws) if x < keep)
    return CLabeling(labels)
