from ptn_kit.cli.cmd.check_cmd import check
from ptn_kit.cli.cmd.complete_cmd import complete

CROSSED = """((((A)a1,B)p)p1,(((C)c1,D)q)q1)r;
#TRANSFERS
q1 -> a1
p1 -> c1
"""


def test_valid_network(runner, caterpillar_files):
    _, matrix, network = caterpillar_files
    result = runner.invoke(check, ["--network", network, "--matrix", matrix])
    assert result.exit_code == 0
    assert "time-consistent" in result.output


def test_not_time_consistent(runner, tmp_path):
    path = tmp_path / "crossed.network"
    path.write_text(CROSSED)
    result = runner.invoke(check, ["--network", str(path)])
    assert result.exit_code == 3
    assert "cycle" in result.output


def test_structural_error(runner, tmp_path):
    path = tmp_path / "broken.network"
    path.write_text("((A,B),C\n")
    assert runner.invoke(check, ["--network", str(path)]).exit_code == 1


def test_completion_output_passes(runner, caterpillar_files, tmp_path):
    tree, matrix, _ = caterpillar_files
    prefix = tmp_path / "run"
    assert runner.invoke(complete, ["--tree", tree, "--matrix", matrix, "--out", str(prefix)]).exit_code == 0
    result = runner.invoke(check, ["--network", str(tmp_path / "run.network"), "--matrix", matrix,
                                   "--labeling", str(tmp_path / "run.labeling.json")])
    assert result.exit_code == 0, result.output


def test_labels_need_a_matrix(runner, caterpillar_files, tmp_path):
    tree, matrix, _ = caterpillar_files
    prefix = tmp_path / "run"
    runner.invoke(complete, ["--tree", tree, "--matrix", matrix, "--out", str(prefix)])
    result = runner.invoke(check, ["--network", str(tmp_path / "run.network"),
                                   "--labeling", str(tmp_path / "run.labeling.json")])
    assert result.exit_code == 1
