"""Complete CLI command module for ptn-kit.

Adds time-consistent transfers to a tree until it explains a matrix, and
writes the network, its labeling and times, a DOT rendering and a JSON report.
"""

import click

from oarc_log import enable_debug_logging

from ptn_kit.cli.cmd.common import echo_written, exits, secho, write_network_artifacts, write_report, write_table
from ptn_kit.cli.help_texts import (
    ARGS_FITCH_HELP,
    ARGS_MATRIX_HELP,
    ARGS_OUT_HELP,
    ARGS_PRELABEL_HELP,
    ARGS_PRUNE_HELP,
    ARGS_TABLE_HELP,
    ARGS_TREE_HELP,
    ARGS_VERBOSE_HELP,
)
from ptn_kit.config.config import Config
from ptn_kit.core.completion import complete as complete_tree, prune_transfers
from ptn_kit.core.storage import read_labeling, read_matrix, read_tree
from ptn_kit.utils.const import SUCCESS
from ptn_kit.utils.errors import InputError


def per_character_rows(report):
    return [{"character": c, "first_appearances": report.first_appearance_counts[c]}
            for c in report.characters]


@click.command()
@click.option('--tree', 'tree_file', required=True, help=ARGS_TREE_HELP)
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@click.option('--prelabel', 'prelabel_file', help=ARGS_PRELABEL_HELP)
@click.option('--fitch', is_flag=True, help=ARGS_FITCH_HELP)
@click.option('--prune', is_flag=True, help=ARGS_PRUNE_HELP)
@click.option('--out', 'prefix', required=True, help=ARGS_OUT_HELP)
@click.option('--table', is_flag=True, help=ARGS_TABLE_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@exits
def complete(tree_file, matrix_file, prelabel_file, fitch, prune, prefix, table, verbose):
    """Complete a tree into a perfect transfer network.

    Writes PREFIX.network, PREFIX.labeling.json, PREFIX.dot and
    PREFIX.report.json (transferCount, bounds, per-character |A_c|).

    Examples:

      Complete with the Fitch pre-labeling:

        $ ptn-kit complete --tree wc.tree --matrix wc.matrix.csv --fitch --out run

      Complete from a custom pre-labeling and prune:

        $ ptn-kit complete --tree wc.tree --matrix wc.matrix.csv \\
            --prelabel wc.prelabel.json --prune --out run

    Args:
        tree_file (str): Path of the base tree.
        matrix_file (str): Path of the character matrix CSV.
        prelabel_file (str, optional): Labeling file used as the pre-labeling.
        fitch (bool): Use the Fitch pre-labeling (the default).
        prune (bool): Drop transfers the network does not need.
        prefix (str): Output prefix for the written artifacts.
        table (bool): Also write the per-character Parquet table.
        verbose (bool): Enables debug logging.

    Returns:
        int: SUCCESS constant once the artifacts are written.
    """
    if prelabel_file and fitch:
        raise InputError("--prelabel and --fitch are mutually exclusive")

    tree = read_tree(tree_file)
    matrix = read_matrix(matrix_file)

    prelabeling = None
    if prelabel_file:
        prelabeling, _ = read_labeling(prelabel_file, tree)
        if prelabeling is None:
            raise InputError(f"Pre-labeling file {prelabel_file} has no 'labels' section")

    report = complete_tree(tree, matrix, prelabeling,
                           prelabeling_name="custom" if prelabeling is not None else "fitch")
    if prune:
        report = prune_transfers(report, matrix, threads=Config().threads)

    written = write_network_artifacts(prefix, report.network, report.labeling, report.time_map)
    paths = list(written.values()) + [write_report(prefix, report.to_report())]
    if table:
        paths.append(write_table(prefix, per_character_rows(report)))

    secho(f"✓ {report.transfer_count} transfer(s) "
          f"(bounds {report.fitch_lower}..{report.fitch_upper})", fg='green')
    echo_written(paths)
    return SUCCESS
