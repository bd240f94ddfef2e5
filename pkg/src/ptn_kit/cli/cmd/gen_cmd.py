"""Generator CLI command module for ptn-kit.

Writes the power-set worst-case instance and seeded random instances as
tree/network, matrix and pre-labeling files.
"""

from typing import Optional

import click

from oarc_log import enable_debug_logging, log

from ptn_kit.cli.cmd.common import artifact, echo_written, exits, secho
from ptn_kit.cli.help_texts import (
    ARGS_CHARACTERS_HELP,
    ARGS_CONFIG_HELP,
    ARGS_DENSITY_HELP,
    ARGS_K_HELP,
    ARGS_OUT_HELP,
    ARGS_SEED_HELP,
    ARGS_TAXA_HELP,
    ARGS_TRANSFERS_HELP,
    ARGS_VERBOSE_HELP,
    GEN_GROUP_HELP,
)
from ptn_kit.config.config import Config, apply_config_file
from ptn_kit.core.bounds import generate_worst_case, upper_bound_power_set
from ptn_kit.core.storage import format_labeling, format_network, format_tree, write_matrix, write_text
from ptn_kit.utils.const import (
    MATRIX_SUFFIX,
    NETWORK_SUFFIX,
    PRELABEL_SUFFIX,
    SUCCESS,
    TREE_SUFFIX,
)
from ptn_kit.utils.errors import InputError
from ptn_kit.utils.random_instances import make_rng, random_matrix, random_network, taxon_names


@click.group(help=GEN_GROUP_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@click.option('--config', help=ARGS_CONFIG_HELP, callback=apply_config_file)
def gen(verbose, config):
    """Generate worst-case and random instances.

    Examples:

      The k=3 power-set instance:

        $ ptn-kit gen worst-case --k 3 --out wc

      A seeded random tree with 8 taxa and 4 characters:

        $ ptn-kit gen random --taxa 8 --characters 4 --seed 7 --out rnd
    """
    pass


@gen.command(name='worst-case')
@click.option('--k', 'k', type=int, required=True, help=ARGS_K_HELP)
@click.option('--out', 'prefix', required=True, help=ARGS_OUT_HELP)
@exits
def worst_case(k, prefix):
    """Write the 2^k-taxon power-set matrix, its tree and level labeling.

    Produces PREFIX.tree, PREFIX.matrix.csv and PREFIX.prelabel.json.
    Greedy completion of this tree needs exactly 2^k - k - 1 transfers.

    Args:
        k (int): Number of characters; the tree has 2^k leaves.
        prefix (str): Output prefix for the written files.

    Raises:
        KTooLarge: If k exceeds the configured max_k.
    """
    instance = generate_worst_case(k, max_k=Config().max_k)

    paths = [artifact(prefix, TREE_SUFFIX), artifact(prefix, MATRIX_SUFFIX),
             artifact(prefix, PRELABEL_SUFFIX)]
    write_text(format_tree(instance.tree), paths[0])
    write_matrix(instance.matrix, paths[1])
    write_text(format_labeling(instance.tree, instance.level_labeling,
                               character_order=instance.matrix.characters), paths[2])

    secho(f"✓ Worst case k={k}: {instance.matrix.n_taxa} taxa, "
          f"{len(instance.tree.nodes)} nodes, greedy needs {upper_bound_power_set(k)} transfer(s)",
          fg='green')
    echo_written(paths)
    return SUCCESS


@gen.command(name='random')
@click.option('--taxa', type=int, required=True, help=ARGS_TAXA_HELP)
@click.option('--characters', type=int, required=True, help=ARGS_CHARACTERS_HELP)
@click.option('--transfers', type=int, default=0, show_default=True, help=ARGS_TRANSFERS_HELP)
@click.option('--density', type=float, default=0.5, show_default=True, help=ARGS_DENSITY_HELP)
@click.option('--seed', type=int, help=ARGS_SEED_HELP)
@click.option('--out', 'prefix', required=True, help=ARGS_OUT_HELP)
@exits
def random_instance(taxa, characters, transfers, density, seed: Optional[int], prefix):
    """Write a random tree (or network with --transfers) and a random matrix.

    The same seed always gives the same files.

    Args:
        taxa (int): Number of leaves.
        characters (int): Number of matrix columns.
        transfers (int): Random transfers added to the tree.
        density (float): Chance that a taxon has a given character.
        seed (int, optional): Seed; the configured seed when omitted.
        prefix (str): Output prefix for the written files.
    """
    if taxa < 1 or characters < 1 or transfers < 0:
        raise InputError("--taxa and --characters must be positive, --transfers non-negative")
    if not 0.0 <= density <= 1.0:
        raise InputError(f"--density must lie in [0, 1] (got {density})")

    seed = Config().seed if seed is None else seed
    log.debug(f"Generating random instance with seed {seed}")
    rng = make_rng(seed)

    net = random_network(taxa, transfers, rng)
    matrix = random_matrix(taxon_names(taxa), characters, rng, density=density)

    if transfers:
        net_path = artifact(prefix, NETWORK_SUFFIX)
        write_text(format_network(net), net_path)
    else:
        net_path = artifact(prefix, TREE_SUFFIX)
        write_text(format_tree(net), net_path)
    matrix_path = artifact(prefix, MATRIX_SUFFIX)
    write_matrix(matrix, matrix_path)

    secho(f"✓ Random instance (seed {seed}): {taxa} taxa, {characters} character(s), "
          f"{len(net.transfer_edges)} transfer(s)", fg='green')
    echo_written([net_path, matrix_path])
    return SUCCESS
