"""Tests for the root command group."""
from ptn_kit.cli import cli
from ptn_kit.config.config import Config


def test_lists_commands(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for name in ("check", "complete", "config", "gen", "oracle", "recognize", "reconstruct", "stats"):
        assert name in result.output


def test_threads_and_seed_reach_config(runner, caterpillar_files):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(cli, ["--threads", "3", "--seed", "8", "stats", "--tree", tree,
                                 "--matrix", matrix])
    assert result.exit_code == 0
    assert Config().threads == 3
    assert Config().seed == 8


def test_threads_must_be_positive(runner):
    result = runner.invoke(cli, ["--threads", "0", "config"])
    assert result.exit_code == 2


def test_unknown_command(runner):
    assert runner.invoke(cli, ["frobnicate"]).exit_code == 2
