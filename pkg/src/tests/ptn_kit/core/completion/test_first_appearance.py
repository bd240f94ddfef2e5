"""Tests for first-appearance nodes."""
import pytest

from ptn_kit.core.completion import first_appearances, fitch_labeling, initial_time_map
from ptn_kit.core.model import CLabeling
from ptn_kit.utils.errors import NotNoLoss


def test_caterpillar(caterpillar):
    tree, matrix = caterpillar
    found = first_appearances(tree, fitch_labeling(tree, matrix), characters=matrix.characters)
    assert found.sets == {"a": frozenset({1}), "b": frozenset({2, 4})}
    assert found.counts() == {"a": 1, "b": 2}
    assert found.total == 3
    assert (found.lower, found.upper) == (1, 1)


def test_order_is_oldest_first(greedy_gap):
    tree, matrix = greedy_gap
    found = first_appearances(tree, fitch_labeling(tree, matrix), initial_time_map(tree),
                              characters=matrix.characters)
    # R (4) is older than the leaf X (2)
    assert found.order["a"] == (4, 2)
    assert found.order["b"] == (2, 6, 8)


def test_absent_character_counts_zero(cherry):
    labeling = CLabeling({0: set(), 1: set(), 2: set()})
    found = first_appearances(cherry, labeling, characters=["c"])
    assert found.count("c") == 0
    assert (found.lower, found.upper) == (0, 0)


def test_loss_is_rejected(cherry):
    labeling = CLabeling({0: {"c"}, 1: {"c"}, 2: set()})
    with pytest.raises(NotNoLoss):
        first_appearances(cherry, labeling)


def test_initial_time_map(caterpillar):
    tree, _ = caterpillar
    times = initial_time_map(tree)
    assert all(times[v] == 0 for v in tree.leaves)
    assert times[1] == 1 and times[0] == 2
    assert times.is_consistent_with(tree)
