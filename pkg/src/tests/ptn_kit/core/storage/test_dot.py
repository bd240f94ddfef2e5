"""Tests for DOT rendering."""
from ptn_kit.core.model import CLabeling, insert_transfer
from ptn_kit.core.storage import network_to_dot


def test_labeled_cherry(cherry):
    dot = network_to_dot(cherry, CLabeling({0: set(), 1: {"a", "b"}, 2: set()}))
    assert dot.startswith("digraph ptn {")
    assert "{a,b}" in dot
    assert "0 -> 1 [style=solid];" in dot
    assert dot.rstrip().endswith("}")


def test_transfers_are_dashed(cherry):
    dot = network_to_dot(insert_transfer(cherry, 1, 2))
    assert "3 -> 4 [style=dashed, color=red];" in dot
    assert "shape=diamond" in dot
    assert "shape=point" not in dot


def test_quotes_are_escaped(cherry):
    dot = network_to_dot(cherry, labels={0: 'r"x', 1: "X", 2: "Y"})
    assert 'label="r\\"x"' in dot
