"""Tests for matrix CSV reading and writing."""
import pytest

from ptn_kit.core.storage import format_matrix, parse_matrix, read_matrix, write_matrix
from ptn_kit.utils.errors import DuplicateName, EmptyMatrix, NonBinaryCell, ParseError


def test_parse_small_matrix():
    matrix = parse_matrix("taxon,a\nX,1\nY,0")
    assert matrix.taxa == ("X", "Y")
    assert matrix.characters == ("a",)
    assert matrix.has("X", "a")
    assert not matrix.has("Y", "a")


def test_blank_lines_and_spaces_are_ignored():
    matrix = parse_matrix("taxon, a, b\n\nX, 1, 0\n\nY, 0, 1\n")
    assert matrix.characters == ("a", "b")
    assert matrix.characters_of("Y") == frozenset({"b"})


def test_header_only_is_empty():
    with pytest.raises(EmptyMatrix):
        parse_matrix("taxon,a\n")


def test_non_binary_cell_position():
    with pytest.raises(NonBinaryCell) as exc:
        parse_matrix("taxon,a,b\nX,1,0\nY,0,2\n")
    assert exc.value.line == 3
    assert exc.value.column == 3
    assert exc.value.value == "2"


def test_blank_lines_keep_file_line_numbers():
    with pytest.raises(NonBinaryCell) as exc:
        parse_matrix("taxon,a\n\nX,x\n")
    assert exc.value.line == 3


@pytest.mark.parametrize("text", [
    "",
    "name,a\nX,1\n",
    "taxon,a\nX,1,0\n",
    "taxon,a b\nX,1\n",
])
def test_malformed_matrices(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_duplicate_taxon():
    with pytest.raises(DuplicateName):
        parse_matrix("taxon,a\nX,1\nX,0\n")


def test_format_is_stable():
    text = "taxon,a,b\nX,1,0\nY,0,1\n"
    assert format_matrix(parse_matrix(text)) == text


def test_write_then_read(tmp_path):
    matrix = parse_matrix("taxon,a,b\nX,1,0\nY,0,1\n")
    path = tmp_path / "sub" / "m.matrix.csv"
    write_matrix(matrix, path)
    assert read_matrix(path) == matrix
