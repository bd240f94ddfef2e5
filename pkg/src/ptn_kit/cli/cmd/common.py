"""Helpers shared by the ptn-kit commands: error exits, output and artifact writing."""

import functools
import pathlib
from typing import Callable, Dict, Optional

import click

from oarc_log import log

from ptn_kit.config.config import Config
from ptn_kit.core.model.labeling import CLabeling, TimeMap
from ptn_kit.core.model.network import LgtNetwork
from ptn_kit.core.storage.network_io import serialize_network, write_text
from ptn_kit.core.storage.report_storage import ReportStorage
from ptn_kit.utils.const import (
    DOT_SUFFIX,
    FAILURE,
    LABELING_SUFFIX,
    NETWORK_SUFFIX,
    REPORT_SUFFIX,
    SUCCESS,
    TABLE_SUFFIX,
)
from ptn_kit.utils.errors import PtnError
from ptn_kit.utils.paths import Paths


def secho(message: str, fg: Optional[str] = None, err: bool = False, bold: bool = False) -> None:
    """click.secho that honours the color setting (PTNKIT_COLOR)."""
    color = Config().color
    click.secho(message, fg=fg if color else None, bold=bold and color, err=err)


def exits(func: Callable) -> Callable:
    """Turn a command's return value into the process exit code.

    PtnError becomes a red one-line message and the error's exit code; an
    unreadable file exits with 1.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = func(*args, **kwargs)
        except PtnError as e:
            log.error(f"{type(e).__name__}: {e}")
            secho(f"Error: {e}", fg="red", err=True)
            code = e.exit_code
        except OSError as e:
            log.error(f"I/O error: {e}")
            secho(f"Error: {e}", fg="red", err=True)
            code = FAILURE
        ctx.exit(SUCCESS if code is None else code)
    return wrapper


def artifact(prefix: str, suffix: str) -> pathlib.Path:
    """Path PREFIX + suffix, relative prefixes resolved against output_dir."""
    return Paths.artifact_path(prefix, suffix, Config().output_dir)


def write_network_artifacts(prefix: str, net: LgtNetwork, labeling: Optional[CLabeling] = None,
                            time_map: Optional[TimeMap] = None) -> Dict[str, pathlib.Path]:
    """Write PREFIX.network, PREFIX.labeling.json (if any) and PREFIX.dot.

    Args:
        prefix: Output prefix
        net: The network to write
        labeling: Optional labeling written with the times
        time_map: Optional time map

    Returns:
        Written paths keyed by "network", "dot" and "labeling"
    """
    serialized = serialize_network(net, labeling, time_map)
    written = {"network": artifact(prefix, NETWORK_SUFFIX), "dot": artifact(prefix, DOT_SUFFIX)}
    write_text(serialized.network, written["network"])
    write_text(serialized.dot, written["dot"])
    if serialized.labeling is not None:
        written["labeling"] = artifact(prefix, LABELING_SUFFIX)
        write_text(serialized.labeling, written["labeling"])
    return written


def write_report(prefix: str, report: dict) -> pathlib.Path:
    """Save PREFIX.report.json and return its path.

    Raises:
        PtnError: If the report cannot be written.
    """
    path = artifact(prefix, REPORT_SUFFIX)
    if not ReportStorage.save_report(report, path):
        raise PtnError(f"Could not write report {path}")
    return path


def write_table(prefix: str, rows) -> pathlib.Path:
    path = artifact(prefix, TABLE_SUFFIX)
    if not ReportStorage.save_table(rows, path):
        raise PtnError(f"Could not write table {path}")
    return path


def echo_written(paths) -> None:
    for path in paths:
        click.echo(f"  • {path}")
