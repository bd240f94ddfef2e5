from ptn_kit.cli.cmd.gen_cmd import gen
from ptn_kit.core.storage import read_matrix, read_network, read_tree


def test_gen_group_help(runner):
    result = runner.invoke(gen, ["--help"])
    assert result.exit_code == 0
    assert "worst-case" in result.output


def test_worst_case(runner, tmp_path):
    result = runner.invoke(gen, ["worst-case", "--k", "3", "--out", str(tmp_path / "wc")])
    assert result.exit_code == 0
    assert "greedy needs 4 transfer(s)" in result.output
    tree = read_tree(tmp_path / "wc.tree")
    matrix = read_matrix(tmp_path / "wc.matrix.csv")
    assert len(tree.leaves) == matrix.n_taxa == 8
    assert (tmp_path / "wc.prelabel.json").exists()


def test_worst_case_guard(runner, tmp_path):
    result = runner.invoke(gen, ["worst-case", "--k", "17", "--out", str(tmp_path / "wc")])
    assert result.exit_code == 2
    assert not (tmp_path / "wc.tree").exists()


def test_random_is_reproducible(runner, tmp_path):
    for name in ("one", "two"):
        result = runner.invoke(gen, ["random", "--taxa", "6", "--characters", "3", "--seed", "4",
                                     "--out", str(tmp_path / name)])
        assert result.exit_code == 0
    assert (tmp_path / "one.tree").read_text() == (tmp_path / "two.tree").read_text()
    assert (tmp_path / "one.matrix.csv").read_text() == (tmp_path / "two.matrix.csv").read_text()


def test_random_network(runner, tmp_path):
    result = runner.invoke(gen, ["random", "--taxa", "5", "--characters", "2", "--transfers", "2",
                                 "--seed", "1", "--out", str(tmp_path / "net")])
    assert result.exit_code == 0
    net = read_network(tmp_path / "net.network")
    assert len(net.taxa) == 5


def test_random_bad_density(runner, tmp_path):
    result = runner.invoke(gen, ["random", "--taxa", "5", "--characters", "2", "--density", "1.5",
                                 "--out", str(tmp_path / "bad")])
    assert result.exit_code == 1
