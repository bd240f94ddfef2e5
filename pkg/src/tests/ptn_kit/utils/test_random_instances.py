"""Tests for the seeded instance generators."""
from ptn_kit.core.model import Tree
from ptn_kit.utils.random_instances import (
    add_random_transfer,
    make_rng,
    random_instance,
    random_matrix,
    random_network,
    random_tree,
    taxon_names,
)


def test_random_tree_shape():
    tree = random_tree(6, make_rng(1))
    assert isinstance(tree, Tree)
    assert tree.taxa == frozenset(taxon_names(6))
    assert len(tree.nodes) == 11


def test_same_seed_same_instance():
    first = random_instance(make_rng(42), 6, 3)
    second = random_instance(make_rng(42), 6, 3)
    assert first[0] == second[0]
    assert first[1] == second[1]


def test_random_matrix_density():
    taxa = taxon_names(5)
    assert not random_matrix(taxa, 4, make_rng(0), density=0.0).presence.any()
    assert random_matrix(taxa, 4, make_rng(0), density=1.0).presence.all()


def test_random_network_transfers():
    net = random_network(5, 3, make_rng(7))
    assert len(net.transfer_edges) <= 3
    assert len(net.nodes) == 9 + 2 * len(net.transfer_edges)


def test_no_transfer_on_a_single_leaf():
    assert add_random_transfer(random_tree(1, make_rng(0)), make_rng(0)) is None


def test_instance_sizes():
    rng = make_rng(3)
    for _ in range(20):
        tree, matrix = random_instance(rng, 5, 3)
        assert 2 <= matrix.n_taxa <= 5
        assert 1 <= matrix.n_characters <= 3
        assert tree.taxa == frozenset(matrix.taxa)
