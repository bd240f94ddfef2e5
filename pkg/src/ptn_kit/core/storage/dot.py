"""Graphviz DOT rendering of networks: solid support edges, dashed transfers."""

from typing import Dict, List, Optional

from ptn_kit.core.model.labeling import CLabeling, TimeMap, format_time
from ptn_kit.core.model.network import LgtNetwork, NodeId, NodeKind
from ptn_kit.core.storage.naming import node_labels
from ptn_kit.utils.const import (
    DOT_GRAPH_NAME,
    DOT_SUPPORT_STYLE,
    DOT_TRANSFER_COLOR,
    DOT_TRANSFER_STYLE,
)

_SHAPES = {
    NodeKind.LEAF: "box",
    NodeKind.RETICULATION: "diamond",
    NodeKind.SUBDIVISION: "point",
}


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def network_to_dot(net: LgtNetwork, labeling: Optional[CLabeling] = None,
                   time_map: Optional[TimeMap] = None,
                   labels: Optional[Dict[NodeId, str]] = None) -> str:
    """DOT text for a network, transfer edges dashed.

    Args:
        net: The network
        labeling: Optional character sets shown on each node
        time_map: Optional times shown on each node
        labels: Node labels; generated by node_labels when omitted

    Returns:
        A digraph in DOT syntax
    """
    labels = labels or node_labels(net)

    lines: List[str] = [f"digraph {DOT_GRAPH_NAME} {{"]
    for v in net.pre_order():
        text = labels[v]
        if labeling is not None:
            text += "\\n{" + ",".join(sorted(labeling.characters_at(v))) + "}"
        if time_map is not None:
            text += "\\nt=" + format_time(time_map[v])
        shape = _SHAPES.get(net.kinds[v], "ellipse")
        lines.append(f"  {v} [label={_quote(text)}, shape={shape}];")
    for u, v in sorted(net.support_edges):
        lines.append(f"  {u} -> {v} [style={DOT_SUPPORT_STYLE}];")
    for u, v in sorted(net.transfer_edges):
        lines.append(f"  {u} -> {v} [style={DOT_TRANSFER_STYLE}, color={DOT_TRANSFER_COLOR}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
