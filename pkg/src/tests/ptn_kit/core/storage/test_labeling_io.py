"""Tests for labeling files."""
import json
from fractions import Fraction

import pytest

from ptn_kit.core.model import CLabeling, TimeMap
from ptn_kit.core.storage import format_labeling, parse_labeling, read_labeling, write_text
from ptn_kit.utils.errors import LabelingDomainError, ParseError


@pytest.fixture
def labeled_cherry(cherry):
    labeling = CLabeling({0: set(), 1: {"b", "a"}, 2: {"a"}})
    times = TimeMap({0: 1, 1: 0, 2: 0})
    return cherry, labeling, times


def test_format_is_keyed_by_label(labeled_cherry):
    net, labeling, times = labeled_cherry
    document = json.loads(format_labeling(net, labeling, times))
    assert document["labels"] == {"n1": [], "X": ["a", "b"], "Y": ["a"]}
    assert document["times"] == {"n1": "1/2^0", "X": "0/2^0", "Y": "0/2^0"}


def test_character_order_is_respected(labeled_cherry):
    net, labeling, _ = labeled_cherry
    document = json.loads(format_labeling(net, labeling, character_order=("b", "a")))
    assert document["labels"]["X"] == ["b", "a"]
    assert "times" not in document


def test_parse_round_trip(labeled_cherry, tmp_path):
    net, labeling, times = labeled_cherry
    path = tmp_path / "cherry.labeling.json"
    write_text(format_labeling(net, labeling, times), path)
    parsed_labels, parsed_times = read_labeling(path, net)
    assert dict(parsed_labels) == dict(labeling)
    assert dict(parsed_times) == {0: Fraction(1), 1: Fraction(0), 2: Fraction(0)}


def test_times_only(cherry):
    labeling, times = parse_labeling('{"times": {"n1": "1", "X": "0", "Y": "0"}}', cherry)
    assert labeling is None
    assert times[0] == 1


def test_keys_must_match_nodes(cherry):
    with pytest.raises(LabelingDomainError):
        parse_labeling('{"labels": {"n1": [], "X": []}}', cherry)
    with pytest.raises(LabelingDomainError):
        parse_labeling('{"labels": {"n1": [], "X": [], "Y": [], "Q": []}}', cherry)


@pytest.mark.parametrize("text", [
    "{not json",
    "[]",
    '{"labels": {"n1": "a", "X": [], "Y": []}}',
    '{"labels": []}',
    '{"times": {"n1": "1/3", "X": "0", "Y": "0"}}',
])
def test_malformed_labelings(cherry, text):
    with pytest.raises(ParseError):
        parse_labeling(text, cherry)
