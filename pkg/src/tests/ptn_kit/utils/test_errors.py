"""Tests for the error hierarchy."""
import pytest

from oarc_utils.errors import OARCError

from ptn_kit.utils.const import FAILURE, GUARD_EXCEEDED
from ptn_kit.utils.errors import (
    Exceeded,
    InputError,
    KTooLarge,
    NonBinaryCell,
    NotNoLoss,
    ParseError,
    PtnError,
    SigmaMismatch,
    TooLarge,
)


def test_hierarchy():
    assert issubclass(PtnError, OARCError)
    assert issubclass(NonBinaryCell, ParseError)
    assert issubclass(ParseError, InputError)


@pytest.mark.parametrize("cls", [KTooLarge, TooLarge, Exceeded])
def test_guard_exit_code(cls):
    assert cls("too big").exit_code == GUARD_EXCEEDED


def test_input_exit_code():
    assert InputError("bad").exit_code == FAILURE


def test_parse_error_position():
    error = ParseError("Unexpected ')'", line=2, column=5)
    assert str(error) == "Unexpected ')' (line 2, column 5)"
    assert error.context == {"line": 2, "column": 5}
    assert str(ParseError("Empty file")) == "Empty file"


def test_context_is_kept():
    error = TooLarge("limit", leaves=9)
    assert error.context == {"leaves": 9}


def test_sigma_mismatch_message():
    error = SigmaMismatch(missing=["B"], extra=["Z"])
    assert "missing from network: B" in str(error)
    assert error.context["extra"] == ("Z",)


def test_not_no_loss():
    error = NotNoLoss((1, 3), {"b", "a"})
    assert error.characters == ("a", "b")
    assert error.edge == (1, 3)
