"""Recognize CLI command module for ptn-kit.

Decides whether a network with its taxa is a perfect transfer network for a
character matrix and optionally writes the explaining labeling.
"""

import click

from oarc_log import enable_debug_logging, log

from ptn_kit.cli.cmd.common import exits, secho
from ptn_kit.cli.help_texts import (
    ARGS_ALL_VIOLATIONS_HELP,
    ARGS_EMIT_LABELING_HELP,
    ARGS_MATRIX_HELP,
    ARGS_NETWORK_HELP,
    ARGS_VERBOSE_HELP,
)
from ptn_kit.config.config import Config
from ptn_kit.core.recognition import explains_check, recognize as recognize_network
from ptn_kit.core.storage import format_labeling, read_matrix, read_network, write_text
from ptn_kit.utils.const import FAILURE, NEGATIVE, SUCCESS


@click.command()
@click.option('--network', 'network_file', required=True, help=ARGS_NETWORK_HELP)
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@click.option('--all-violations', is_flag=True, help=ARGS_ALL_VIOLATIONS_HELP)
@click.option('--emit-labeling', type=click.Path(dir_okay=False), help=ARGS_EMIT_LABELING_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@exits
def recognize(network_file, matrix_file, all_violations, emit_labeling, verbose):
    """Check whether a network is a perfect transfer network.

    Exits with 0 if it is, 3 if it is not, 1 on invalid input or when the
    recognized labeling fails verification.

    Examples:

      Recognize a network:

        $ ptn-kit recognize --network run.network --matrix data.matrix.csv

      List every failing character and keep the labeling on success:

        $ ptn-kit recognize --network run.network --matrix data.matrix.csv \\
            --all-violations --emit-labeling run.labeling.json

    Args:
        network_file (str): Path of the network file.
        matrix_file (str): Path of the character matrix CSV.
        all_violations (bool): Report every failing character, not just the first.
        emit_labeling (str, optional): Where to write the labeling on success.
        verbose (bool): Enables debug logging.

    Returns:
        int: SUCCESS, NEGATIVE, or FAILURE if the labeling does not verify.
    """
    net = read_network(network_file)
    matrix = read_matrix(matrix_file)

    result = recognize_network(net, matrix, threads=Config().threads, collect_all=all_violations)
    if not result:
        secho(f"✗ Not a PTN ({len(result.refutations)} character(s) refuted)", fg='yellow')
        for refutation in result.refutations:
            click.echo(f"  • {refutation.describe(net)}")
        return NEGATIVE

    check = explains_check(net, matrix, result.labeling)
    if not check:
        log.error(f"Recognized labeling fails verification on {net!r}")
        secho("✗ Labeling found by recognition does not explain the matrix", fg='red', err=True)
        for violation in check.definition:
            click.echo(f"  • [{violation.clause}] {violation.message}", err=True)
        return FAILURE
    if emit_labeling:
        write_text(format_labeling(net, result.labeling, character_order=matrix.characters),
                   emit_labeling)
        click.echo(f"Labeling written to {emit_labeling}")

    secho(f"✓ PTN: {matrix.n_characters} character(s) explained on {len(net.nodes)} nodes",
          fg='green')
    return SUCCESS
