"""Forbidden sets: nodes forced to lack a character."""

from typing import FrozenSet, Set

from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork, NodeId

ForbiddenSet = FrozenSet[NodeId]


def forbidden(net: LgtNetwork, matrix: CharacterMatrix, character: str) -> ForbiddenSet:
    """F_c: nodes with a support-tree leaf below them that lacks the character.

    One post-order pass; the result is closed under support ancestors.

    Args:
        net: The network
        matrix: Character matrix over the network's taxa
        character: The matrix column

    Returns:
        The forbidden nodes

    Raises:
        UnknownCharacter: character is not a matrix column
    """
    column = matrix.character_index(character)
    has = {taxon: bool(matrix.presence[i, column]) for i, taxon in enumerate(matrix.taxa)}

    lacking: Set[NodeId] = set()
    for v in net.post_order():
        if v in net.sigma:
            if not has.get(net.sigma[v], False):
                lacking.add(v)
        elif any(child in lacking for child in net.support_children(v)):
            lacking.add(v)
    return frozenset(lacking)
