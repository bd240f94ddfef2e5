"""Parsers, writers and report storage."""

from ptn_kit.core.storage.dot import network_to_dot
from ptn_kit.core.storage.labeling_io import format_labeling, parse_labeling, read_labeling
from ptn_kit.core.storage.matrix_io import format_matrix, parse_matrix, read_matrix, write_matrix
from ptn_kit.core.storage.naming import node_labels
from ptn_kit.core.storage.network_io import (
    SerializedNetwork,
    format_network,
    format_tree,
    parse_network,
    parse_tree,
    read_network,
    read_tree,
    serialize_network,
    write_text,
)
from ptn_kit.core.storage.report_storage import ReportStorage

__all__ = [
    "network_to_dot",
    "format_labeling",
    "parse_labeling",
    "read_labeling",
    "format_matrix",
    "parse_matrix",
    "read_matrix",
    "write_matrix",
    "node_labels",
    "SerializedNetwork",
    "format_network",
    "format_tree",
    "parse_network",
    "parse_tree",
    "read_network",
    "read_tree",
    "serialize_network",
    "write_text",
    "ReportStorage",
]
