"""
JSON labeling files.

    {"labels": {"r": [], "X": ["a", "b"]}, "times": {"r": "3/2^0", "X": "0/2^0"}}

Keys are the node labels used by the paired network file; times are exact.
"""

import json
from typing import Dict, Optional, Tuple

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling, TimeMap, format_time, parse_time
from ptn_kit.core.model.network import LgtNetwork, NodeId
from ptn_kit.core.storage.naming import node_labels
from ptn_kit.utils.errors import LabelingDomainError, ParseError
from ptn_kit.utils.paths import PathLike


def format_labeling(net: LgtNetwork, labeling: Optional[CLabeling] = None,
                    time_map: Optional[TimeMap] = None,
                    labels: Optional[Dict[NodeId, str]] = None,
                    character_order: Optional[Tuple[str, ...]] = None) -> str:
    """JSON text with nodes in support pre-order; deterministic.

    Args:
        net: The network the labels refer to
        labeling: Optional character sets per node
        time_map: Optional times per node
        labels: Node labels; generated by node_labels when omitted
        character_order: Order of characters within each node's list

    Returns:
        The labeling file text
    """
    labels = labels or node_labels(net)
    rank = {c: i for i, c in enumerate(character_order or ())}

    def ordered(characters):
        return sorted(characters, key=lambda c: (rank.get(c, len(rank)), c))

    document = {}
    if labeling is not None:
        document["labels"] = {labels[v]: ordered(labeling.characters_at(v))
                              for v in net.pre_order()}
    if time_map is not None:
        document["times"] = {labels[v]: format_time(time_map[v]) for v in net.pre_order()}
    return json.dumps(document, indent=2) + "\n"


def parse_labeling(text: str, net: LgtNetwork) -> Tuple[Optional[CLabeling], Optional[TimeMap]]:
    """Read labels and times keyed by the network's node labels.

    Args:
        text: Labeling file contents
        net: The network the labels refer to

    Returns:
        (labeling, time map); either is None when its section is absent

    Raises:
        ParseError: invalid JSON or times
        LabelingDomainError: keys do not cover exactly the network's nodes
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid labeling JSON: {e.msg}", line=e.lineno, column=e.colno)
    if not isinstance(document, dict):
        raise ParseError("Labeling file must hold a JSON object", line=1, column=1)

    by_label = {name: v for v, name in node_labels(net).items()}

    def keyed(section: str) -> Optional[Dict[NodeId, object]]:
        if section not in document:
            return None
        entries = document[section]
        if not isinstance(entries, dict):
            raise ParseError(f"'{section}' must be a JSON object")
        unknown = sorted(set(entries) - set(by_label))
        missing = sorted(set(by_label) - set(entries))
        if unknown or missing:
            raise LabelingDomainError(
                f"'{section}' keys differ from the network's nodes "
                f"(unknown: {unknown[:10]}, missing: {missing[:10]})",
                unknown=tuple(unknown), missing=tuple(missing),
            )
        return {by_label[name]: value for name, value in entries.items()}

    labels = keyed("labels")
    times = keyed("times")
    labeling = None
    if labels is not None:
        for v, characters in labels.items():
            if not isinstance(characters, list):
                raise ParseError(f"Label of node {v} must be a list of characters")
        labeling = CLabeling(labels)
    time_map = None
    if times is not None:
        time_map = TimeMap({v: parse_time(str(t)) for v, t in times.items()})
    return labeling, time_map


def read_labeling(path: PathLike, net: LgtNetwork) -> Tuple[Optional[CLabeling], Optional[TimeMap]]:
    log.debug(f"Reading labeling from {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_labeling(f.read(), net)
