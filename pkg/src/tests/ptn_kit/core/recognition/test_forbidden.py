"""Tests for forbidden sets."""
from ptn_kit.core.model import CharacterMatrix
from ptn_kit.core.recognition import forbidden


def test_every_leaf_has_the_character(cherry):
    matrix = CharacterMatrix.from_sets({"X": {"c"}, "Y": {"c"}})
    assert forbidden(cherry, matrix, "c") == frozenset()


def test_no_leaf_has_the_character(cherry):
    matrix = CharacterMatrix.from_sets({"X": set(), "Y": set()}, characters=["c"])
    assert forbidden(cherry, matrix, "c") == cherry.nodes


def test_cherry(cherry, cherry_matrix):
    assert forbidden(cherry, cherry_matrix, "c") == frozenset({0, 2})


def test_closed_under_support_ancestors(caterpillar_with_transfer):
    net, matrix = caterpillar_with_transfer
    banned = forbidden(net, matrix, "b")
    assert banned == frozenset({0, 1, 3})
    for v in banned:
        assert set(net.ancestors_in_support(v)) <= banned
