import pandas as pd

from ptn_kit.cli.cmd.stats_cmd import stats
from ptn_kit.core.storage import ReportStorage


def test_stats(runner, caterpillar_files):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(stats, ["--tree", tree, "--matrix", matrix])
    assert result.exit_code == 0
    assert "lower: 1" in result.output
    assert "upper: 1" in result.output
    assert "transfers_needed" in result.output


def test_stats_out(runner, caterpillar_files, tmp_path):
    tree, matrix, _ = caterpillar_files
    result = runner.invoke(stats, ["--tree", tree, "--matrix", matrix, "--out", str(tmp_path / "st")])
    assert result.exit_code == 0
    report = ReportStorage.load_report(tmp_path / "st.report.json")
    assert report["firstAppearances"] == {"a": 1, "b": 2}
    table = pd.read_parquet(tmp_path / "st.parquet")
    assert list(table["transfers_needed"]) == [0, 1]
