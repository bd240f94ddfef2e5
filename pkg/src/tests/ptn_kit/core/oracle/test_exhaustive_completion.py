"""Tests for brute-force minimum completion and reconstruction."""
import pytest

from ptn_kit.core.bounds import completion_bounds
from ptn_kit.core.completion import complete, prune_transfers
from ptn_kit.core.model import CharacterMatrix, Infeasible, check_time_consistency
from ptn_kit.core.oracle import (
    enumerate_trees,
    min_completion_exhaustive,
    min_reconstruction_exhaustive,
    placements,
)
from ptn_kit.core.recognition import explains_check, recognize
from ptn_kit.utils.errors import Exceeded, TooLarge
from ptn_kit.utils.random_instances import make_rng, random_instance


def test_phylogeny_needs_nothing(phylogeny):
    tree, matrix = phylogeny
    solution = min_completion_exhaustive(tree, matrix)
    assert solution.count == 0
    assert solution.network == tree


def test_caterpillar_needs_one(caterpillar):
    tree, matrix = caterpillar
    solution = min_completion_exhaustive(tree, matrix, 2)
    assert solution.count == 1
    assert explains_check(solution.network, matrix, solution.labeling)
    assert not isinstance(check_time_consistency(solution.network), Infeasible)
    assert solution.to_report("oracle min-completion")["transferCount"] == 1


def test_search_starts_at_zero(caterpillar, monkeypatch):
    tree, matrix = caterpillar
    seen = []

    def counting_recognize(net, matrix):
        seen.append(len(net.transfer_edges))
        return recognize(net, matrix)

    monkeypatch.setattr("ptn_kit.core.oracle.exhaustive_completion.recognize", counting_recognize)
    solution = min_completion_exhaustive(tree, matrix, 1)
    assert solution.count == 1
    assert seen[0] == 0
    assert solution.placements_checked == len(seen)


@pytest.mark.slow
def test_optimum_lies_between_lower_bound_and_greedy():
    rng = make_rng(17)
    solved = 0
    for _ in range(25):
        tree, matrix = random_instance(rng, 5, 3)
        try:
            optimum = min_completion_exhaustive(tree, matrix, 2).count
        except Exceeded:
            continue
        solved += 1
        assert optimum >= completion_bounds(tree, matrix)[0]
        assert optimum <= prune_transfers(complete(tree, matrix), matrix).transfer_count
    assert solved > 0


@pytest.mark.slow
def test_optimum_beats_greedy_on_greedy_gap(greedy_gap):
    tree, matrix = greedy_gap
    solution = min_completion_exhaustive(tree, matrix, 2)
    assert solution.count == 2
    assert complete(tree, matrix).transfer_count == 3


def test_budget_exceeded(caterpillar):
    with pytest.raises(Exceeded):
        min_completion_exhaustive(*caterpillar, max_transfers=0)


def test_guards(caterpillar):
    with pytest.raises(TooLarge):
        min_completion_exhaustive(*caterpillar, max_leaves=2)
    with pytest.raises(TooLarge):
        min_completion_exhaustive(*caterpillar, max_transfers=5, transfer_limit=4)


def test_placement_count(caterpillar):
    tree, _ = caterpillar
    # 4 edges give 12 ordered pairs
    assert len(list(placements(tree, 1))) == 12
    assert len(list(placements(tree, 2))) == 78


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 3), (4, 15), (5, 105)])
def test_enumerate_trees(n, expected):
    taxa = [f"s{i}" for i in range(n)]
    trees = list(enumerate_trees(taxa))
    assert len(trees) == expected
    assert all(tree.taxa == frozenset(taxa) for tree in trees)


def test_min_reconstruction(caterpillar, phylogeny):
    _, matrix = caterpillar
    assert min_reconstruction_exhaustive(matrix, 2).count == 1
    assert min_reconstruction_exhaustive(phylogeny[1], 1).count == 0


def test_min_reconstruction_guard():
    matrix = CharacterMatrix.from_sets({f"s{i}": set() for i in range(4)}, characters=["a"])
    with pytest.raises(TooLarge):
        min_reconstruction_exhaustive(matrix, max_taxa=3)
