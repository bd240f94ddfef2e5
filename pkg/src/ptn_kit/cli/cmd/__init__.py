"""Command modules for the ptn-kit CLI."""

from ptn_kit.cli.cmd.check_cmd import check
from ptn_kit.cli.cmd.complete_cmd import complete
from ptn_kit.cli.cmd.config_cmd import config
from ptn_kit.cli.cmd.gen_cmd import gen
from ptn_kit.cli.cmd.oracle_cmd import oracle
from ptn_kit.cli.cmd.recognize_cmd import recognize
from ptn_kit.cli.cmd.reconstruct_cmd import reconstruct
from ptn_kit.cli.cmd.stats_cmd import stats


__all__ = [
    "check",
    "complete",
    "config",
    "gen",
    "oracle",
    "recognize",
    "reconstruct",
    "stats",
]
