"""Tests for the main module."""
from unittest import mock

import pytest

from ptn_kit.main import main


@pytest.fixture
def mock_cli():
    """Mock the CLI function."""
    with mock.patch("ptn_kit.main.cli") as m:
        yield m


def test_main_success(mock_cli):
    mock_cli.return_value = 0

    assert main() == 0
    mock_cli.assert_called_once_with(standalone_mode=False)


def test_main_with_kwargs(mock_cli):
    mock_cli.return_value = 0

    result = main(args=["stats", "--tree", "t.tree"])

    assert result == 0
    mock_cli.assert_called_once_with(standalone_mode=False, args=["stats", "--tree", "t.tree"])


def test_main_negative_answer(mock_cli):
    """A command's exit code is passed through unchanged."""
    mock_cli.return_value = 3

    assert main() == 3
