"""
Power-set worst case.

The matrix has one taxon per subset of k characters. The tree is the complete
binary tree with 2^k leaves; on level i (the root is level 0) every right
child first acquires character c_i, so c_i has 2^(i-1) first-appearance nodes
and greedy completion needs 2^k - k - 1 transfers.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import NodeId, Tree, build_tree
from ptn_kit.utils.const import DEFAULT_MAX_K
from ptn_kit.utils.errors import InputError, KTooLarge


@dataclass(frozen=True)
class WorstCaseInstance:
    """``levels[i - 1]`` holds the nodes of level i; ``level_labeling`` is the 0/1 lift."""

    k: int
    matrix: CharacterMatrix
    tree: Tree
    level_labeling: CLabeling
    levels: Tuple[Tuple[NodeId, ...], ...]

    def first_appearance_nodes(self, i: int) -> Tuple[NodeId, ...]:
        """Right children of level i, where c_i first appears."""
        character = self.matrix.characters[i - 1]
        return tuple(v for v in self.levels[i - 1]
                     if character in self.level_labeling.characters_at(v))


def character_names(k: int) -> List[str]:
    return [f"c{i}" for i in range(1, k + 1)]


def generate_worst_case(k: int, max_k: int = DEFAULT_MAX_K) -> WorstCaseInstance:
    """Build the power-set matrix, its complete binary tree and the level labeling.

    Node ids follow pre-order with left children first. Taxon names spell the
    path bits, e.g. ``t010`` for left, right, left.

    Args:
        k: Number of characters
        max_k: Largest k accepted

    Returns:
        The instance: tree, power-set matrix, levels and level labeling

    Raises:
        KTooLarge: k exceeds max_k
    """
    if k < 1:
        raise InputError(f"k must be at least 1 (got {k})", k=k)
    if k > max_k:
        raise KTooLarge(f"k={k} exceeds the limit of {max_k} characters", k=k, max_k=max_k)

    characters = character_names(k)
    edges = []
    sigma: Dict[NodeId, str] = {}
    labels: Dict[NodeId, frozenset] = {}
    levels: List[List[NodeId]] = [[] for _ in range(k)]

    next_id = 0
    stack = [(None, "")]
    while stack:
        parent, bits = stack.pop()
        v = next_id
        next_id += 1
        if parent is not None:
            edges.append((parent, v))
        depth = len(bits)
        if depth:
            levels[depth - 1].append(v)
        labels[v] = frozenset(characters[i] for i, b in enumerate(bits) if b == "1")
        if depth == k:
            sigma[v] = "t" + bits
        else:
            stack.append((v, bits + "1"))
            stack.append((v, bits + "0"))

    tree = build_tree(range(next_id), edges, sigma)
    taxa = [sigma[v] for v in tree.pre_order() if v in sigma]
    presence = np.array([[b == "1" for b in taxon[1:]] for taxon in taxa], dtype=bool)
    matrix = CharacterMatrix(tuple(taxa), tuple(characters), presence)

    log.debug(f"Generated worst case k={k}: {len(taxa)} taxa, {next_id} nodes")
    return WorstCaseInstance(
        k=k,
        matrix=matrix,
        tree=tree,
        level_labeling=CLabeling(labels),
        levels=tuple(tuple(sorted(level)) for level in levels),
    )


def power_set_matrix(k: int, max_k: int = DEFAULT_MAX_K) -> CharacterMatrix:
    return generate_worst_case(k, max_k=max_k).matrix


def lower_bound_power_set(k: int) -> int:
    """max(0, ceil(2^k / 3k) - 1) transfers are needed for the power-set matrix."""
    if k < 1:
        raise InputError(f"k must be at least 1 (got {k})", k=k)
    return max(0, -(-(2 ** k) // (3 * k)) - 1)


def upper_bound_power_set(k: int) -> int:
    """2^k - k - 1: the transfers greedy completion uses on the worst-case tree."""
    if k < 1:
        raise InputError(f"k must be at least 1 (got {k})", k=k)
    return 2 ** k - k - 1
