"""Configuration CLI command module for ptn-kit.

Shows the effective configuration and where each value came from, and can
write it out as an INI file.
"""

import pathlib

import click

from oarc_log import enable_debug_logging

from ptn_kit.cli.cmd.common import exits, secho
from ptn_kit.cli.help_texts import ARGS_FORCE_HELP, ARGS_INIT_HELP, ARGS_VERBOSE_HELP
from ptn_kit.config.config import Config
from ptn_kit.config.config_manager import ConfigManager
from ptn_kit.utils.const import FAILURE, SUCCESS


@click.command()
@click.argument('config_file', required=False)
@click.option('--init', 'init_path', type=click.Path(dir_okay=False), help=ARGS_INIT_HELP)
@click.option('--force', is_flag=True, help=ARGS_FORCE_HELP)
@click.option('--verbose', is_flag=True, help=ARGS_VERBOSE_HELP, callback=enable_debug_logging)
@exits
def config(config_file, init_path, force, verbose):
    """Show the effective ptn-kit configuration.

    Every key is listed with its value and source (default, environment or
    file). If CONFIG_FILE is given it is loaded first.

    Examples:

      Show the configuration:

        $ ptn-kit config

      Show it as a custom file would leave it:

        $ ptn-kit config ~/.ptnkit/custom.ini

      Write the current settings to a file:

        $ ptn-kit config --init ptnkit.ini

    Args:
        config_file (str, optional): INI file to load before showing.
        init_path (str, optional): Where to write the current settings.
        force (bool): Overwrite an existing file at init_path.
        verbose (bool): Enables debug logging.
    """
    if config_file:
        Config.apply_config_file(value=config_file)

    if init_path:
        if not ConfigManager.create_config_file(pathlib.Path(init_path), force=force):
            secho(f"{init_path} already exists (use --force to overwrite)", fg='yellow', err=True)
            return FAILURE
        secho(f"✓ Configuration written to {init_path}", fg='green')
        return SUCCESS

    ConfigManager.display_config_info(color=None if Config().color else False)
    return SUCCESS
