from ptn_kit.cli.cmd.reconstruct_cmd import reconstruct
from ptn_kit.core.storage import ReportStorage


def test_reconstruct(runner, caterpillar_files, tmp_path):
    _, matrix, _ = caterpillar_files
    result = runner.invoke(reconstruct, ["--matrix", matrix, "--out", str(tmp_path / "rec")])
    assert result.exit_code == 0
    report = ReportStorage.load_report(tmp_path / "rec.report.json")
    assert report["command"] == "reconstruct"
    assert report["transferCount"] == 1
    assert report["pruned"] is True


def test_no_prune(runner, caterpillar_files, tmp_path):
    _, matrix, _ = caterpillar_files
    result = runner.invoke(reconstruct, ["--matrix", matrix, "--no-prune", "--out", str(tmp_path / "rec")])
    assert result.exit_code == 0
    assert ReportStorage.load_report(tmp_path / "rec.report.json")["pruned"] is False


def test_bad_matrix(runner, tmp_path):
    matrix = tmp_path / "bad.matrix.csv"
    matrix.write_text("taxon,a\nX,2\n")
    result = runner.invoke(reconstruct, ["--matrix", str(matrix), "--out", str(tmp_path / "rec")])
    assert result.exit_code == 1
    assert "line 2" in result.output
