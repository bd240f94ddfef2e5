"""Stable node labels shared by the network, labeling and DOT writers."""

from typing import Dict

from ptn_kit.core.model.network import LgtNetwork, NodeId
from ptn_kit.utils.const import AUTO_LABEL_PREFIX


def node_labels(net: LgtNetwork) -> Dict[NodeId, str]:
    """Label of every node: taxa for leaves, stored names, else fresh n1, n2, ... in pre-order."""
    labels = {}
    taken = set(net.sigma.values()) | set(net.names.values())
    counter = 0
    for v in net.pre_order():
        name = net.name(v)
        if name is None:
            while True:
                counter += 1
                name = f"{AUTO_LABEL_PREFIX}{counter}"
                if name not in taken:
                    break
            taken.add(name)
        labels[v] = name
    return labels
