"""Tests for the no-loss pre-labelings."""
from ptn_kit.core.completion import fitch_labeling, leaf_only_labeling, random_no_loss_labeling
from ptn_kit.utils.random_instances import make_rng


def test_fitch_caterpillar(caterpillar):
    tree, matrix = caterpillar
    labeling = fitch_labeling(tree, matrix)
    assert labeling[1] == frozenset({"a"})
    assert labeling[0] == frozenset()
    assert labeling[2] == frozenset({"a", "b"})
    assert labeling.loss_edges(tree) == []


def test_leaf_only(caterpillar):
    tree, matrix = caterpillar
    labeling = leaf_only_labeling(tree, matrix)
    assert labeling[0] == labeling[1] == frozenset()
    assert labeling[4] == frozenset({"b"})


def test_random_labeling_sits_between_leaf_only_and_fitch(greedy_gap):
    tree, matrix = greedy_gap
    fitch = fitch_labeling(tree, matrix)
    rng = make_rng(3)
    for _ in range(10):
        labeling = random_no_loss_labeling(tree, matrix, rng)
        labeling.check_prelabeling(tree, matrix)
        for v in tree.nodes:
            assert labeling[v] <= fitch[v]


def test_random_labeling_keep_extremes(greedy_gap):
    tree, matrix = greedy_gap
    rng = make_rng(0)
    assert dict(random_no_loss_labeling(tree, matrix, rng, keep=1.0)) == dict(fitch_labeling(tree, matrix))
    assert dict(random_no_loss_labeling(tree, matrix, rng, keep=0.0)) == dict(leaf_only_labeling(tree, matrix))
