import pytest

import ptn_kit.cli.cmd.config_cmd as config_cmd
from ptn_kit.utils.const import ENV_HOME_DIR


@pytest.fixture(autouse=True)
def no_config_files(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_HOME_DIR, str(tmp_path / "home"))
    monkeypatch.chdir(tmp_path)


def test_config_help(runner):
    result = runner.invoke(config_cmd.config, ["--help"])
    assert result.exit_code == 0
    assert "config" in result.output


def test_config_show(runner):
    result = runner.invoke(config_cmd.config)
    assert result.exit_code == 0
    assert "Current configuration" in result.output
    assert "oracle_max_transfers" in result.output


def test_config_with_file(runner, tmp_path):
    path = tmp_path / "custom.ini"
    path.write_text("[ptn-kit]\nthreads = 6\n")
    result = runner.invoke(config_cmd.config, [str(path)])
    assert result.exit_code == 0
    assert "threads: 6" in result.output


def test_config_init(runner, tmp_path):
    path = tmp_path / "out.ini"
    assert runner.invoke(config_cmd.config, ["--init", str(path)]).exit_code == 0
    assert "[ptn-kit]" in path.read_text()
    again = runner.invoke(config_cmd.config, ["--init", str(path)])
    assert again.exit_code == 1
    assert "already exists" in again.output
    assert runner.invoke(config_cmd.config, ["--init", str(path), "--force"]).exit_code == 0
