"""Input files shared by the CLI tests."""
import pytest
from click.testing import CliRunner

from ptn_kit.config.config import Config

CATERPILLAR_TREE = "((S1,S2),S3);\n"
CATERPILLAR_MATRIX = "taxon,a,b\nS1,1,1\nS2,1,0\nS3,0,1\n"
CATERPILLAR_NETWORK = "(((S1)u1,S2)p,(S3)u2)r;\n#TRANSFERS\nu1 -> u2\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def fresh_config():
    Config.initialize()
    yield
    Config.initialize()


@pytest.fixture
def caterpillar_files(tmp_path):
    """(tree, matrix, network) paths for ((S1,S2),S3) and its one-transfer completion."""
    tree = tmp_path / "cat.tree"
    matrix = tmp_path / "cat.matrix.csv"
    network = tmp_path / "cat.network"
    tree.write_text(CATERPILLAR_TREE)
    matrix.write_text(CATERPILLAR_MATRIX)
    network.write_text(CATERPILLAR_NETWORK)
    return str(tree), str(matrix), str(network)
