"""Stats CLI command module for ptn-kit.

Prints the Fitch completion bounds of a tree and matrix together with the
number of first-appearance nodes of every character.
"""

from typing import Optional

import click
import pandas as pd

from oarc_log import enable_debug_logging

from ptn_kit.cli.cmd.common import echo_written, exits, secho, write_report, write_table
from ptn_kit.cli.help_texts import ARGS_MATRIX_HELP, ARGS_OUT_HELP, ARGS_TREE_HELP, ARGS_VERBOSE_HELP
from ptn_kit.core.bounds import fitch_first_appearances
from ptn_kit.core.storage import read_matrix, read_tree
from ptn_kit.utils.const import SUCCESS


def stats_frame(found, characters) -> pd.DataFrame:
    counts = found.counts()
    frame = pd.DataFrame({
        "character": list(characters),
        "first_appearances": [counts[c] for c in characters],
    })
    frame["transfers_needed"] = (frame["first_appearances"] - 1).clip(lower=0)
    return frame


@click.command()
@click.option('--tree', 'tree_file', required=True, help=ARGS_TREE_HELP)
@click.option('--matrix', 'matrix_file', required=True, help=ARGS_MATRIX_HELP)
@click.option('--out', 'prefix', help=ARGS_OUT_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@exits
def stats(tree_file, matrix_file, prefix: Optional[str], verbose):
    """Print transfer-count bounds and per-character first appearances.

    The lower bound is max_c(|A_c| - 1) and the upper bound sum_c(|A_c| - 1)
    under the Fitch labeling of the tree.

    Examples:

      $ ptn-kit stats --tree wc.tree --matrix wc.matrix.csv

      Keep the numbers as JSON and Parquet:

        $ ptn-kit stats --tree wc.tree --matrix wc.matrix.csv --out wc

    Args:
        tree_file (str): Path of the base tree.
        matrix_file (str): Path of the character matrix CSV.
        prefix (str, optional): Output prefix for the JSON report and Parquet table.
        verbose (bool): Enables debug logging.
    """
    tree = read_tree(tree_file)
    matrix = read_matrix(matrix_file)

    found = fitch_first_appearances(tree, matrix)
    frame = stats_frame(found, matrix.characters)

    secho(f"lower: {found.lower}", bold=True)
    secho(f"upper: {found.upper}", bold=True)
    click.echo(frame.to_string(index=False))

    if prefix:
        report = {
            "command": "stats",
            "lowerBound": found.lower,
            "upperBound": found.upper,
            "firstAppearances": found.counts(),
        }
        echo_written([write_report(prefix, report), write_table(prefix, frame)])
    return SUCCESS
