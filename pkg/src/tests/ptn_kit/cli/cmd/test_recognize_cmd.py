import json

from ptn_kit.cli.cmd.recognize_cmd import recognize
from ptn_kit.core.recognition.explains import NO_LOSS, ExplainsResult, Violation


def test_recognize_help(runner):
    result = runner.invoke(recognize, ["--help"])
    assert result.exit_code == 0
    assert "--emit-labeling" in result.output


def test_tree_is_not_a_ptn(runner, caterpillar_files):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(recognize, ["--network", tree, "--matrix", matrix])
    assert result.exit_code == 3
    assert "Not a PTN" in result.output
    assert "'b'" in result.output


def test_network_is_a_ptn(runner, caterpillar_files, tmp_path):
    _, matrix, network = caterpillar_files
    out = tmp_path / "cat.labeling.json"
    result = runner.invoke(recognize, ["--network", network, "--matrix", matrix,
                                       "--emit-labeling", str(out)])
    assert result.exit_code == 0
    assert "PTN" in result.output
    labels = json.loads(out.read_text())["labels"]
    assert sorted(labels["u1"]) == ["a", "b"]


def test_all_violations(runner, caterpillar_files, tmp_path):
    tree, _, _ = caterpillar_files
    matrix = tmp_path / "three.matrix.csv"
    matrix.write_text("taxon,a,b,d\nS1,1,1,0\nS2,1,0,1\nS3,0,1,1\n")
    first = runner.invoke(recognize, ["--network", tree, "--matrix", str(matrix)])
    every = runner.invoke(recognize, ["--network", tree, "--matrix", str(matrix), "--all-violations"])
    assert "1 character(s) refuted" in first.output
    assert "2 character(s) refuted" in every.output
    assert every.exit_code == 3


def test_missing_file(runner, caterpillar_files, tmp_path):
    _, matrix, _ = caterpillar_files
    result = runner.invoke(recognize, ["--network", str(tmp_path / "nope.network"), "--matrix", matrix])
    assert result.exit_code == 1
    assert "Error" in result.output


def test_sigma_mismatch(runner, caterpillar_files, tmp_path):
    _, matrix, _ = caterpillar_files
    other = tmp_path / "other.tree"
    other.write_text("(X,Y);\n")
    result = runner.invoke(recognize, ["--network", str(other), "--matrix", matrix])
    assert result.exit_code == 1


def test_unverified_labeling_fails(runner, caterpillar_files, tmp_path, monkeypatch):
    _, matrix, network = caterpillar_files
    broken = ExplainsResult(definition=(Violation(NO_LOSS, "edge (0, 1) drops 'a'"),))
    monkeypatch.setattr("ptn_kit.cli.cmd.recognize_cmd.explains_check", lambda *args: broken)
    out = tmp_path / "cat.labeling.json"
    result = runner.invoke(recognize, ["--network", network, "--matrix", matrix,
                                       "--emit-labeling", str(out)])
    assert result.exit_code == 1
    assert "does not explain the matrix" in result.output
    assert "drops 'a'" in result.output
    assert not out.exists()
