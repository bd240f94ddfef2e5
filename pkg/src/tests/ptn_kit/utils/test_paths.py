"""Tests for the paths module."""
import os
import pathlib
from unittest import mock

from ptn_kit.utils.paths import Paths


def test_ensure_path(tmp_path):
    target = tmp_path / "a" / "b"
    result = Paths.ensure_path(target)
    assert target.is_dir()
    assert isinstance(result, pathlib.Path)


def test_get_ptnkit_home_dir(tmp_path):
    with mock.patch.dict(os.environ, {"PTNKIT_HOME_DIR": str(tmp_path)}):
        assert Paths.get_ptnkit_home_dir() == tmp_path.resolve()

    with mock.patch.dict(os.environ, clear=True):
        with mock.patch("pathlib.Path.home", return_value=pathlib.Path("/home/user")):
            assert Paths.get_ptnkit_home_dir() == pathlib.Path("/home/user")


def test_get_ptnkit_dir():
    with mock.patch("ptn_kit.utils.paths.Paths.get_ptnkit_home_dir",
                    return_value=pathlib.Path("/home/user")):
        assert Paths.get_ptnkit_dir() == pathlib.Path("/home/user/.ptnkit")


def test_get_default_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("PTNKIT_OUTPUT_DIR", str(tmp_path))
    assert Paths.get_default_output_dir() == tmp_path.resolve()
    monkeypatch.delenv("PTNKIT_OUTPUT_DIR")
    monkeypatch.chdir(tmp_path)
    assert Paths.get_default_output_dir() == pathlib.Path.cwd()


def test_artifact_path(tmp_path):
    assert Paths.artifact_path(tmp_path / "run", ".network") == tmp_path / "run.network"
    assert Paths.artifact_path("wc", ".matrix.csv", base_dir=tmp_path) == tmp_path / "wc.matrix.csv"
    assert Paths.artifact_path("sub/wc", ".dot", base_dir=tmp_path) == tmp_path / "sub" / "wc.dot"


def test_ensure_parent_dir(tmp_path):
    ok, error = Paths.ensure_parent_dir(tmp_path / "x" / "file.txt")
    assert ok and error == ""
    assert (tmp_path / "x").is_dir()


def test_find_config_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("PTNKIT_HOME_DIR", str(tmp_path / "home"))
    assert Paths.find_config_file() is None
    (tmp_path / "ptnkit.ini").write_text("[ptn-kit]\n")
    assert Paths.find_config_file() == tmp_path / "ptnkit.ini"
