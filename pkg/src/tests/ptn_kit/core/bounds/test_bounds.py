"""Tests for the Fitch transfer-count bounds."""
from ptn_kit.core.bounds import (
    approximation_witness,
    completion_bounds,
    fitch_first_appearances,
    generate_worst_case,
)
from ptn_kit.core.completion import complete
from ptn_kit.core.model import CharacterMatrix


def test_bounds(phylogeny, caterpillar, greedy_gap):
    assert completion_bounds(*phylogeny) == (0, 0)
    assert completion_bounds(*caterpillar) == (1, 1)
    assert completion_bounds(*greedy_gap) == (2, 3)


def test_worst_case_bounds():
    instance = generate_worst_case(3)
    assert completion_bounds(instance.tree, instance.matrix) == (3, 4)


def test_first_appearances_cover_every_character(cherry):
    matrix = CharacterMatrix.from_sets({"X": set(), "Y": set()}, characters=["c"])
    found = fitch_first_appearances(cherry, matrix)
    assert found.counts() == {"c": 0}


def test_approximation_witness(greedy_gap):
    report = complete(*greedy_gap)
    assert approximation_witness(report)
