"""Check CLI command module for ptn-kit.

Structural validation and time consistency of a network file, plus the
optional checks of a labeling file against the network and a matrix.
"""

import click

from oarc_log import enable_debug_logging, log

from ptn_kit.cli.cmd.common import exits, secho
from ptn_kit.cli.help_texts import (
    ARGS_LABELING_HELP,
    ARGS_MATRIX_HELP,
    ARGS_NETWORK_HELP,
    ARGS_VERBOSE_HELP,
)
from ptn_kit.core.model import Infeasible, check_time_consistency
from ptn_kit.core.recognition import explains_check
from ptn_kit.core.storage import read_labeling, read_matrix, read_network
from ptn_kit.utils.const import NEGATIVE, SUCCESS
from ptn_kit.utils.errors import InputError


def echo_problems(title: str, problems) -> None:
    secho(f"✗ {title}", fg='yellow')
    for problem in problems:
        click.echo(f"  • {problem}")


@click.command()
@click.option('--network', 'network_file', required=True, help=ARGS_NETWORK_HELP)
@click.option('--matrix', 'matrix_file', help=ARGS_MATRIX_HELP)
@click.option('--labeling', 'labeling_file', help=ARGS_LABELING_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@exits
def check(network_file, matrix_file, labeling_file, verbose):
    """Validate a network and check that it is time consistent.

    Structural problems (cycles, bad degrees, duplicate taxa) exit with 1.
    A network that is not time consistent exits with 3 and prints a cycle
    of transfer classes. With --labeling the file's times must witness
    time consistency, and with --matrix as well its labels must explain
    the matrix.

    Examples:

      $ ptn-kit check --network run.network

      $ ptn-kit check --network run.network --matrix data.matrix.csv \\
          --labeling run.labeling.json

    Args:
        network_file (str): Path of the network file.
        matrix_file (str, optional): Matrix the labeling must explain.
        labeling_file (str, optional): Labeling file with labels and times.
        verbose (bool): Enables debug logging.

    Returns:
        int: SUCCESS, FAILURE on invalid input, NEGATIVE if not time consistent.
    """
    net = read_network(network_file)
    log.debug(f"Parsed {net!r}")

    witness = check_time_consistency(net)
    if isinstance(witness, Infeasible):
        echo_problems("Not time consistent", [f"cycle: {witness.describe()}"])
        return NEGATIVE

    matrix = read_matrix(matrix_file) if matrix_file else None
    if matrix is not None:
        matrix.check_sigma(net)

    if labeling_file:
        labeling, time_map = read_labeling(labeling_file, net)
        if time_map is not None:
            problems = time_map.violations(net)
            if problems:
                echo_problems("Times do not witness time consistency", problems)
                return NEGATIVE
        if labeling is not None:
            if matrix is None:
                raise InputError("--labeling with labels needs --matrix to check against")
            result = explains_check(net, matrix, labeling)
            if not result:
                echo_problems("Labeling does not explain the matrix",
                              [f"[{v.clause}] {v.message}" for v in result.definition])
                return NEGATIVE

    secho(f"✓ Valid, time-consistent network: {len(net.nodes)} nodes, "
          f"{len(net.transfer_edges)} transfer(s)", fg='green')
    return SUCCESS
