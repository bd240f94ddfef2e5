"""Oracle CLI command module for ptn-kit.

Exhaustive searches for toy-scale instances: minimum completion, minimum
reconstruction, reference recognition and the greedy-versus-optimum gap.
Size guards come from the configuration (oracle_max_*, reconstruct_max_taxa).
"""

from typing import Optional

import click

from oarc_log import enable_debug_logging

from ptn_kit.cli.cmd.common import echo_written, exits, secho, write_network_artifacts, write_report, write_table
from ptn_kit.cli.help_texts import (
    ARGS_CONFIG_HELP,
    ARGS_COUNT_HELP,
    ARGS_MATRIX_HELP,
    ARGS_MAX_CHARACTERS_HELP,
    ARGS_MAX_TAXA_HELP,
    ARGS_MAX_TRANSFERS_HELP,
    ARGS_NETWORK_HELP,
    ARGS_OUT_HELP,
    ARGS_SEED_HELP,
    ARGS_TREE_HELP,
    ARGS_VERBOSE_HELP,
    ORACLE_GROUP_HELP,
)
from ptn_kit.config.config import Config, apply_config_file
from ptn_kit.core.oracle import (
    gap_distribution,
    min_completion_exhaustive,
    min_reconstruction_exhaustive,
    recognize_exhaustive,
)
from ptn_kit.core.storage import read_matrix, read_network, read_tree
from ptn_kit.utils.const import NEGATIVE, SUCCESS
from ptn_kit.utils.errors import InputError, TooLarge
from ptn_kit.utils.random_instances import make_rng, random_instance


def _max_transfers(value: Optional[int]) -> int:
    return Config().oracle_max_transfers if value is None else value


def _save_solution(prefix: Optional[str], solution, command: str) -> None:
    """Write the solution network and its report when an output prefix is given."""
    if not prefix:
        return
    written = write_network_artifacts(prefix, solution.network, solution.labeling)
    echo_written(list(written.values()) + [write_report(prefix, solution.to_report(command))])


@click.group(help=ORACLE_GROUP_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@click.option('--config', help=ARGS_CONFIG_HELP, callback=apply_config_file)
def oracle(verbose, config):
    """Exhaustive reference searches for toy-scale instances.

    Minima are over labeled transfer placements on the given tree, not up to
    network isomorphism.

    Examples:

      $ ptn-kit oracle min-completion --tree cat.tree --matrix cat.matrix.csv --max 3

      $ ptn-kit oracle gap --count 50 --max-taxa 5 --seed 1 --out gap
    """
    pass


@oracle.command(name='min-completion')
@click.option('--tree', 'tree_file', required=True, help=ARGS_TREE_HELP)
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@click.option('--max', 'max_transfers', type=int, help=ARGS_MAX_TRANSFERS_HELP)
@click.option('--out', 'prefix', help=ARGS_OUT_HELP)
@exits
def min_completion(tree_file, matrix_file, max_transfers, prefix):
    """Fewest transfers that make the tree a PTN for the matrix.

    Prints the count on its own line, then a summary.

    Args:
        tree_file (str): Path of the base tree.
        matrix_file (str): Path of the character matrix CSV.
        max_transfers (int, optional): Search limit; oracle_max_transfers when omitted.
        prefix (str, optional): Output prefix for the optimal network and report.

    Raises:
        Exceeded: If no completion exists within the limit (exit 2).
    """
    config = Config()
    solution = min_completion_exhaustive(
        read_tree(tree_file), read_matrix(matrix_file), _max_transfers(max_transfers),
        max_leaves=config.oracle_max_leaves, transfer_limit=config.oracle_max_transfers)
    click.echo(solution.count)
    secho(f"✓ Minimum completion: {solution.count} transfer(s) "
          f"({solution.placements_checked} placements checked)", fg='green')
    _save_solution(prefix, solution, "oracle min-completion")
    return SUCCESS


@oracle.command(name='min-reconstruction')
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@click.option('--max', 'max_transfers', type=int, help=ARGS_MAX_TRANSFERS_HELP)
@click.option('--out', 'prefix', help=ARGS_OUT_HELP)
@exits
def min_reconstruction(matrix_file, max_transfers, prefix):
    """Fewest transfers over every tree shape on the matrix taxa."""
    config = Config()
    solution = min_reconstruction_exhaustive(
        read_matrix(matrix_file), _max_transfers(max_transfers),
        max_taxa=config.reconstruct_max_taxa, transfer_limit=config.oracle_max_transfers)
    click.echo(solution.count)
    secho(f"✓ Minimum reconstruction: {solution.count} transfer(s)", fg='green')
    _save_solution(prefix, solution, "oracle min-reconstruction")
    return SUCCESS


@oracle.command(name='recognize')
@click.option('--network', 'network_file', required=True, help=ARGS_NETWORK_HELP)
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@exits
def recognize(network_file, matrix_file):
    """Recognize a PTN by trying every candidate labeling (exit 0 or 3)."""
    net = read_network(network_file)
    result = recognize_exhaustive(net, read_matrix(matrix_file),
                                  max_nodes=Config().oracle_max_nodes)
    if not result:
        secho("✗ Not a PTN", fg='yellow')
        for refutation in result.refutations:
            click.echo(f"  • {refutation.describe(net)}")
        return NEGATIVE
    secho("✓ PTN", fg='green')
    return SUCCESS


@oracle.command(name='gap')
@click.option('--count', type=int, default=20, show_default=True, help=ARGS_COUNT_HELP)
@click.option('--max-taxa', type=int, default=5, show_default=True, help=ARGS_MAX_TAXA_HELP)
@click.option('--max-characters', type=int, default=3, show_default=True, help=ARGS_MAX_CHARACTERS_HELP)
@click.option('--max', 'max_transfers', type=int, help=ARGS_MAX_TRANSFERS_HELP)
@click.option('--seed', type=int, help=ARGS_SEED_HELP)
@click.option('--out', 'prefix', help=ARGS_OUT_HELP)
@exits
def gap(count, max_taxa, max_characters, max_transfers, seed, prefix):
    """Pruned greedy transfer count minus the exhaustive optimum on random instances.

    Args:
        count (int): Number of random instances.
        max_taxa (int): Largest tree drawn.
        max_characters (int): Largest character count drawn.
        max_transfers (int, optional): Search limit for the optimum.
        seed (int, optional): Seed; the configured seed when omitted.
        prefix (str, optional): Output prefix for the JSON report and Parquet table.
    """
    config = Config()
    if count < 1 or max_taxa < 2 or max_characters < 1:
        raise InputError("--count and --max-characters must be positive, --max-taxa at least 2")
    if max_taxa > config.oracle_max_leaves:
        raise TooLarge(f"--max-taxa {max_taxa} exceeds oracle_max_leaves={config.oracle_max_leaves}",
                       taxa=max_taxa)
    max_transfers = _max_transfers(max_transfers)
    if max_transfers > config.oracle_max_transfers:
        raise TooLarge(f"--max {max_transfers} exceeds oracle_max_transfers="
                       f"{config.oracle_max_transfers}", max_transfers=max_transfers)

    rng = make_rng(config.seed if seed is None else seed)
    instances = [random_instance(rng, max_taxa, max_characters) for _ in range(count)]
    report = gap_distribution(instances, max_transfers=max_transfers)

    click.echo(report.to_frame().to_string(index=False))
    secho(f"gap histogram: {report.histogram} (unsolved: {report.unsolved})", bold=True)
    if prefix:
        echo_written([write_report(prefix, report.to_report()), write_table(prefix, report.to_frame())])
    return SUCCESS
