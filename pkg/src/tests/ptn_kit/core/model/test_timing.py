"""Tests for time-consistency checking."""
import pytest

from ptn_kit.core.model import (
    Infeasible,
    TimeMap,
    check_time_consistency,
    is_time_consistent,
)
from ptn_kit.core.model.timing import transfer_classes
from ptn_kit.core.storage import parse_network
from ptn_kit.utils.random_instances import make_rng, random_network

CROSSED = """((((A)a1,B)p)p1,(((C)c1,D)q)q1)r;
#TRANSFERS
q1 -> a1
p1 -> c1
"""


def test_tree_is_time_consistent(caterpillar):
    tree, _ = caterpillar
    witness = check_time_consistency(tree)
    assert isinstance(witness, TimeMap)
    assert witness.is_consistent_with(tree)
    assert witness[tree.root] == 2


def test_completion_shape_is_time_consistent(caterpillar_with_transfer):
    net, _ = caterpillar_with_transfer
    witness = check_time_consistency(net)
    assert isinstance(witness, TimeMap)
    assert witness.is_consistent_with(net)
    assert is_time_consistent(net)


def test_crossed_transfers_are_infeasible():
    net = parse_network(CROSSED)
    result = check_time_consistency(net)
    assert isinstance(result, Infeasible)
    assert not result
    assert len(result.cycle) == 4
    assert ">" in result.describe()
    assert not is_time_consistent(net)


def feasible_by_search(net):
    """Whether the transfer classes can be stacked bottom-up with every support edge pointing down."""
    classes = transfer_classes(net)
    below = {cls: set() for cls in classes.values()}
    for u, v in net.support_edges:
        below[classes[u]].add(classes[v])
    everything = frozenset(below)
    dead_ends = set()

    def extend(placed):
        if placed == everything:
            return True
        if placed in dead_ends:
            return False
        for cls in everything - placed:
            if cls not in below[cls] and below[cls] <= placed and extend(placed | {cls}):
                return True
        dead_ends.add(placed)
        return False

    return extend(frozenset())


@pytest.mark.slow
def test_agrees_with_search_over_class_orders():
    rng = make_rng(23)
    outcomes = set()
    checked = 0
    while checked < 300:
        net = random_network(int(rng.integers(2, 5)), int(rng.integers(0, 3)), rng)
        if len(net.nodes) > 10:
            continue
        checked += 1
        witness = check_time_consistency(net)
        consistent = isinstance(witness, TimeMap)
        assert consistent == feasible_by_search(net)
        if consistent:
            assert witness.violations(net) == []
            assert witness.leaves_at_zero(net)
        outcomes.add(consistent)
    assert outcomes == {True, False}
