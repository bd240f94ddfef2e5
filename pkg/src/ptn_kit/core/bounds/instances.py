"""Small hand-built instances with known answers."""

from typing import Tuple

from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import Tree, build_tree


def caterpillar_instance() -> Tuple[Tree, CharacterMatrix]:
    """((S1,S2),S3) with S1={a,b}, S2={a}, S3={b}: one transfer for b is needed."""
    tree = build_tree(
        nodes=range(5),
        edges=[(0, 1), (0, 4), (1, 2), (1, 3)],
        sigma={2: "S1", 3: "S2", 4: "S3"},
    )
    matrix = CharacterMatrix.from_sets(
        {"S1": {"a", "b"}, "S2": {"a"}, "S3": {"b"}}, characters=["a", "b"])
    return tree, matrix


def greedy_gap_instance() -> Tuple[Tree, CharacterMatrix]:
    """Two characters on which greedy completion without pruning uses one transfer too many.

    ((X,Z)P,((Y1,Y2)N,Y3)R) with X, Y1, Y3 = {a,b}, Y2 = {a}, Z = {}. Greedy
    inserts 3 transfers; 2 suffice.
    """
    tree = build_tree(
        nodes=range(9),
        edges=[(0, 1), (0, 4), (1, 2), (1, 3), (4, 5), (4, 8), (5, 6), (5, 7)],
        sigma={2: "X", 3: "Z", 6: "Y1", 7: "Y2", 8: "Y3"},
        names={1: "P", 4: "R", 5: "N"},
    )
    matrix = CharacterMatrix.from_sets(
        {"X": {"a", "b"}, "Z": set(), "Y1": {"a", "b"}, "Y2": {"a"}, "Y3": {"a", "b"}},
        characters=["a", "b"],
    )
    return tree, matrix
