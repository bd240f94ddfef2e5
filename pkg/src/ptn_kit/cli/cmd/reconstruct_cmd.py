"""Reconstruct CLI command module for ptn-kit.

Builds a base tree by greedy taxon insertion (each taxon goes on the edge
that keeps the total Fitch first-appearance count smallest), completes it and
prunes unneeded transfers.
"""

import click

from oarc_log import enable_debug_logging

from ptn_kit.cli.cmd.common import echo_written, exits, secho, write_network_artifacts, write_report
from ptn_kit.cli.help_texts import ARGS_MATRIX_HELP, ARGS_NO_PRUNE_HELP, ARGS_OUT_HELP, ARGS_VERBOSE_HELP
from ptn_kit.config.config import Config
from ptn_kit.core.completion import reconstruct as reconstruct_network
from ptn_kit.core.storage import read_matrix
from ptn_kit.utils.const import SUCCESS


@click.command()
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@click.option('--no-prune', is_flag=True, help=ARGS_NO_PRUNE_HELP)
@click.option('--out', 'prefix', required=True, help=ARGS_OUT_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@exits
def reconstruct(matrix_file, no_prune, prefix, verbose):
    """Reconstruct a perfect transfer network from a matrix alone.

    Examples:

      $ ptn-kit reconstruct --matrix data.matrix.csv --out rec

    Args:
        matrix_file (str): Path of the character matrix CSV.
        no_prune (bool): Keep every transfer greedy completion inserts.
        prefix (str): Output prefix for the written artifacts.
        verbose (bool): Enables debug logging.
    """
    matrix = read_matrix(matrix_file)
    report = reconstruct_network(matrix, prune=not no_prune, threads=Config().threads)

    written = write_network_artifacts(prefix, report.network, report.labeling, report.time_map)
    summary = dict(report.to_report(), command="reconstruct")
    paths = list(written.values()) + [write_report(prefix, summary)]

    secho(f"✓ Reconstructed a PTN with {report.transfer_count} transfer(s)", fg='green')
    echo_written(paths)
    return SUCCESS
