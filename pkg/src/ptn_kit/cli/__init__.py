"""
Command-line interface for ptn-kit.

This module provides the root command group and registers the subcommands.
"""

import click

from oarc_log import enable_debug_logging

from ptn_kit.cli.help_texts import (
    ARGS_CONFIG_HELP,
    ARGS_SEED_HELP,
    ARGS_THREADS_HELP,
    ARGS_VERBOSE_HELP,
    MAIN_HELP,
)
from ptn_kit.config.config import Config, apply_config_file
from ptn_kit.utils.const import CONFIG_KEY_SEED, CONFIG_KEY_THREADS
from ptn_kit.cli.cmd import (
    check,
    complete,
    config,
    gen,
    oracle,
    recognize,
    reconstruct,
    stats,
)

@click.group(help=MAIN_HELP)
@click.version_option(package_name='ptn-kit', message='%(prog)s %(version)s')
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@click.option('--config', help=ARGS_CONFIG_HELP, callback=apply_config_file)
@click.option('--threads', type=click.IntRange(min=1), help=ARGS_THREADS_HELP,
              callback=Config.apply_option(CONFIG_KEY_THREADS))
@click.option('--seed', type=int, help=ARGS_SEED_HELP,
              callback=Config.apply_option(CONFIG_KEY_SEED))
def cli(verbose, config, threads, seed):
    """ptn-kit CLI."""
    pass

# Add commands
cli.add_command(check)
cli.add_command(complete)
cli.add_command(config)
cli.add_command(gen)
cli.add_command(oracle)
cli.add_command(recognize)
cli.add_command(reconstruct)
cli.add_command(stats)

if __name__ == "__main__":
    cli()
