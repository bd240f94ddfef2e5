from ptn_kit.cli.cmd.oracle_cmd import oracle
from ptn_kit.core.storage import ReportStorage


def test_min_completion(runner, caterpillar_files, tmp_path):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(oracle, ["min-completion", "--tree", tree, "--matrix", matrix,
                                    "--max", "2", "--out", str(tmp_path / "opt")])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "1"
    assert ReportStorage.load_report(tmp_path / "opt.report.json")["transferCount"] == 1
    assert (tmp_path / "opt.network").exists()


def test_min_completion_guard(runner, caterpillar_files):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(oracle, ["min-completion", "--tree", tree, "--matrix", matrix, "--max", "9"])
    assert result.exit_code == 2


def test_min_completion_budget(runner, caterpillar_files):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(oracle, ["min-completion", "--tree", tree, "--matrix", matrix, "--max", "0"])
    assert result.exit_code == 2
    assert "No completion" in result.output


def test_min_reconstruction(runner, caterpillar_files):
    _, matrix, _ = caterpillar_files
    result = runner.invoke(oracle, ["min-reconstruction", "--matrix", matrix, "--max", "2"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "1"


def test_recognize(runner, caterpillar_files):
    tree, matrix, network = caterpillar_files
    assert runner.invoke(oracle, ["recognize", "--network", network, "--matrix", matrix]).exit_code == 0
    assert runner.invoke(oracle, ["recognize", "--network", tree, "--matrix", matrix]).exit_code == 3


def test_gap(runner, tmp_path):
    result = runner.invoke(oracle, ["gap", "--count", "3", "--max-taxa", "4", "--max-characters", "2",
                                    "--max", "2", "--seed", "1", "--out", str(tmp_path / "gap")])
    assert result.exit_code == 0, result.output
    assert "gap histogram" in result.output
    assert ReportStorage.load_report(tmp_path / "gap.report.json")["instances"] == 3


def test_gap_guards(runner):
    assert runner.invoke(oracle, ["gap", "--max-taxa", "50"]).exit_code == 2
    assert runner.invoke(oracle, ["gap", "--count", "0"]).exit_code == 1
