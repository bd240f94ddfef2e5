"""Shared instances for the ptn-kit tests."""
import pytest

from ptn_kit.core.bounds import caterpillar_instance, greedy_gap_instance
from ptn_kit.core.model import CharacterMatrix, build_tree, insert_transfer


@pytest.fixture
def cherry():
    """Root 0 over leaves X (1) and Y (2)."""
    return build_tree([0, 1, 2], [(0, 1), (0, 2)], {1: "X", 2: "Y"})


@pytest.fixture
def cherry_matrix():
    return CharacterMatrix.from_sets({"X": {"c"}, "Y": set()}, characters=["c"])


@pytest.fixture
def caterpillar():
    return caterpillar_instance()


@pytest.fixture
def caterpillar_with_transfer(caterpillar):
    """The caterpillar plus a transfer from the edge above S1 to the edge above S3."""
    tree, matrix = caterpillar
    return insert_transfer(tree, 2, 4), matrix


@pytest.fixture
def greedy_gap():
    return greedy_gap_instance()


@pytest.fixture
def phylogeny():
    """Nested characters on ((A,B),C): a on A and B, b on A only."""
    tree = build_tree(range(5), [(0, 1), (0, 4), (1, 2), (1, 3)], {2: "A", 3: "B", 4: "C"})
    matrix = CharacterMatrix.from_sets({"A": {"a", "b"}, "B": {"a"}, "C": set()},
                                       characters=["a", "b"])
    return tree, matrix
