"""Tests for greedy tree completion."""
import time

import pytest

from ptn_kit.core.bounds import approximation_witness, generate_worst_case, upper_bound_power_set
from ptn_kit.core.completion import (
    complete,
    fitch_labeling,
    leaf_only_labeling,
    prune_transfers,
    random_no_loss_labeling,
)
from ptn_kit.core.model import CLabeling, Infeasible, base_tree, check_time_consistency
from ptn_kit.core.recognition import explains_check, recognize
from ptn_kit.utils.errors import InvalidPrelabeling, SigmaMismatch
from ptn_kit.utils.random_instances import make_rng, random_instance


def assert_closed(report, matrix):
    """The completed network explains the matrix with a consistent time map."""
    assert explains_check(report.network, matrix, report.labeling)
    assert report.time_map.violations(report.network) == []
    assert report.time_map.leaves_at_zero(report.network)
    assert recognize(report.network, matrix)


def test_perfect_phylogeny_needs_nothing(phylogeny):
    tree, matrix = phylogeny
    report = complete(tree, matrix)
    assert report.transfer_count == 0
    assert report.network == tree
    assert report.steps == ()
    assert_closed(report, matrix)


def test_caterpillar_needs_one(caterpillar):
    tree, matrix = caterpillar
    report = complete(tree, matrix)
    assert report.transfer_count == 1
    assert (report.lower, report.upper) == (1, 1)
    assert report.prelabeling == "fitch"
    ((donor, recipient),) = report.network.transfer_edges
    assert report.network.support_children(donor) == (2,)
    assert report.network.support_children(recipient) == (4,)
    assert_closed(report, matrix)


def test_greedy_gap_instance_uses_three(greedy_gap):
    tree, matrix = greedy_gap
    report = complete(tree, matrix)
    assert report.transfer_count == 3
    assert (report.lower, report.upper) == (2, 3)
    assert_closed(report, matrix)


@pytest.mark.parametrize("k", range(1, 9))
def test_worst_case_count(k):
    instance = generate_worst_case(k)
    report = complete(instance.tree, instance.matrix)
    assert report.transfer_count == upper_bound_power_set(k) == 2 ** k - k - 1
    assert report.first_appearance_counts == {f"c{i}": 2 ** (i - 1) for i in range(1, k + 1)}
    assert report.prelabeling == "fitch"
    assert approximation_witness(report)
    assert_closed(report, instance.matrix)


def test_worst_case_runs_quickly():
    instances = [generate_worst_case(k) for k in range(1, 9)]
    start = time.perf_counter()
    counts = [complete(i.tree, i.matrix).transfer_count for i in instances]
    assert time.perf_counter() - start < 5
    assert counts == [2 ** k - k - 1 for k in range(1, 9)]


def test_level_labeling_gives_the_same_count():
    instance = generate_worst_case(5)
    report = complete(instance.tree, instance.matrix, instance.level_labeling,
                      prelabeling_name="level")
    assert report.prelabeling == "level"
    assert report.transfer_count == 26


def test_level_labeling_is_fitch():
    instance = generate_worst_case(4)
    assert dict(fitch_labeling(instance.tree, instance.matrix)) == dict(instance.level_labeling)


def test_prelabeling_is_preserved(caterpillar):
    tree, matrix = caterpillar
    prelabeling = leaf_only_labeling(tree, matrix)
    report = complete(tree, matrix, prelabeling)
    assert report.prelabeling == "custom"
    for v in tree.nodes:
        assert report.labeling[v] == prelabeling[v]
    assert report.lower <= report.transfer_count <= report.upper
    assert_closed(report, matrix)


def test_custom_prelabeling_reports_both_bounds(caterpillar):
    tree, matrix = caterpillar
    report = complete(tree, matrix, leaf_only_labeling(tree, matrix))
    assert (report.lower, report.upper) == (1, 2)
    assert (report.fitch_lower, report.fitch_upper) == (1, 1)
    fields = report.to_report()
    assert (fields["lowerBound"], fields["upperBound"]) == (1, 1)
    assert (fields["prelabelingLowerBound"], fields["prelabelingUpperBound"]) == (1, 2)


@pytest.mark.slow
def test_random_prelabelings_are_kept_exactly():
    for seed in range(200):
        rng = make_rng(seed)
        tree, matrix = random_instance(rng, 24, 8)
        prelabeling = random_no_loss_labeling(tree, matrix, rng, keep=float(rng.random()))
        report = complete(tree, matrix, prelabeling)
        for v in tree.nodes:
            assert report.labeling[v] == prelabeling[v]
        assert base_tree(report.network) == tree


def test_invalid_prelabeling(caterpillar):
    tree, matrix = caterpillar
    lossy = CLabeling({0: {"a"}, 1: {"a"}, 2: {"a", "b"}, 3: {"a"}, 4: {"b"}})
    with pytest.raises(InvalidPrelabeling):
        complete(tree, matrix, lossy)
    wrong_leaf = CLabeling({0: set(), 1: set(), 2: {"a"}, 3: {"a"}, 4: {"b"}})
    with pytest.raises(InvalidPrelabeling):
        complete(tree, matrix, wrong_leaf)


def test_sigma_mismatch(cherry, caterpillar):
    _, matrix = caterpillar
    with pytest.raises(SigmaMismatch):
        complete(cherry, matrix)


def test_on_insert_sees_consistent_networks(greedy_gap):
    tree, matrix = greedy_gap
    seen = []

    def on_insert(net, time_map, edge):
        assert edge in net.transfer_edges
        assert time_map.is_consistent_with(net)
        seen.append(edge)

    report = complete(tree, matrix, on_insert=on_insert)
    assert len(seen) == report.transfer_count


def test_report_fields(caterpillar):
    tree, matrix = caterpillar
    report = complete(tree, matrix).to_report()
    assert report["command"] == "complete"
    assert report["transferCount"] == 1
    assert report["firstAppearances"] == {"a": 1, "b": 2}
    assert report["pruned"] is False
    assert "transferCountBeforePruning" not in report
    assert "prelabelingLowerBound" not in report


@pytest.mark.slow
def test_random_instances_are_closed():
    rng = make_rng(11)
    for _ in range(1000):
        tree, matrix = random_instance(rng, 10, 5)
        report = complete(tree, matrix)
        pruned = prune_transfers(report, matrix)
        assert report.lower <= report.transfer_count <= report.upper
        assert pruned.transfer_count <= report.transfer_count
        for result in (report, pruned):
            assert not isinstance(check_time_consistency(result.network), Infeasible)
            assert base_tree(result.network) == tree
            assert_closed(result, matrix)


@pytest.mark.slow
def test_count_lies_within_bounds_on_larger_trees():
    rng = make_rng(12)
    for _ in range(500):
        tree, matrix = random_instance(rng, 64, 16, min_taxa=64)
        report = complete(tree, matrix)
        assert report.lower <= report.transfer_count <= report.upper
