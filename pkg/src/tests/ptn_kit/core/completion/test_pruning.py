"""Tests for transfer pruning."""
from ptn_kit.core.completion import complete, prune_transfers
from ptn_kit.core.model import Infeasible, check_time_consistency
from ptn_kit.core.recognition import explains_check


def test_pruning_drops_one_transfer_on_greedy_gap(greedy_gap):
    tree, matrix = greedy_gap
    report = prune_transfers(complete(tree, matrix), matrix)
    assert report.transfer_count == 2
    assert report.pruned_from == 3
    assert explains_check(report.network, matrix, report.labeling)
    assert report.time_map.is_consistent_with(report.network)
    assert not isinstance(check_time_consistency(report.network), Infeasible)

    summary = report.to_report()
    assert summary["pruned"] is True
    assert summary["transferCountBeforePruning"] == 3


def test_nothing_to_prune(phylogeny):
    tree, matrix = phylogeny
    report = complete(tree, matrix)
    pruned = prune_transfers(report, matrix)
    assert pruned.network == report.network
    assert pruned.pruned_from == 0


def test_needed_transfer_is_kept(caterpillar):
    tree, matrix = caterpillar
    pruned = prune_transfers(complete(tree, matrix), matrix, threads=2)
    assert pruned.transfer_count == 1


def test_pruning_twice_keeps_the_original_count(greedy_gap):
    tree, matrix = greedy_gap
    once = prune_transfers(complete(tree, matrix), matrix)
    twice = prune_transfers(once, matrix)
    assert twice.transfer_count == once.transfer_count
    assert twice.pruned_from == 3
