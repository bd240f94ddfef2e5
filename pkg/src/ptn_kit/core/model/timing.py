"""
Time consistency of tree-based networks.

Transfer endpoints must share a time, support edges must strictly go back in
time. Endpoints joined by transfers are merged into equality classes; the
network is time consistent iff the order support edges induce on the classes
is acyclic. A witness map gives each class its longest-path height, which
puts every leaf at 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple, Union

import networkx as nx

from oarc_log import log

from ptn_kit.core.model.labeling import TimeMap
from ptn_kit.core.model.network import LgtNetwork, NodeId


@dataclass(frozen=True)
class Infeasible:
    """No time-consistent map exists; ``cycle`` lists the classes of a witnessing cycle."""

    cycle: Tuple[FrozenSet[NodeId], ...]

    def __bool__(self) -> bool:
        return False

    def describe(self) -> str:
        parts = ["{" + ",".join(str(v) for v in sorted(cls)) + "}" for cls in self.cycle]
        return " > ".join(parts + parts[:1])


def transfer_classes(net: LgtNetwork) -> Dict[NodeId, FrozenSet[NodeId]]:
    """Map each node to the set of nodes it must share a time with."""
    undirected = nx.Graph()
    undirected.add_nodes_from(net.nodes)
    undirected.add_edges_from(net.transfer_edges)
    classes = {}
    for component in nx.connected_components(undirected):
        frozen = frozenset(component)
        for v in component:
            classes[v] = frozen
    return classes


def check_time_consistency(net: LgtNetwork) -> Union[TimeMap, Infeasible]:
    """Decide whether the network admits a time map.

    Nodes joined by transfers share a time, and every support edge must
    strictly decrease it. Classes are ordered topologically and each gets
    its height.

    Args:
        net: The network to check

    Returns:
        A witness TimeMap with leaves at 0, or Infeasible with a cycle of classes
    """
    classes = transfer_classes(net)
    order = nx.DiGraph()
    order.add_nodes_from(set(classes.values()))
    for u, v in net.support_edges:
        cu, cv = classes[u], classes[v]
        if cu == cv:
            log.debug(f"Support edge ({u}, {v}) lies inside one transfer class")
            return Infeasible(cycle=(cu,))
        order.add_edge(cu, cv)

    if not nx.is_directed_acyclic_graph(order):
        cycle = tuple(u for u, _ in nx.find_cycle(order))
        log.debug(f"Transfer classes form a cycle of length {len(cycle)}")
        return Infeasible(cycle=cycle)

    height: Dict[FrozenSet[NodeId], int] = {}
    for cls in reversed(list(nx.topological_sort(order))):
        successors = list(order.successors(cls))
        height[cls] = 1 + max(height[s] for s in successors) if successors else 0

    return TimeMap({v: Fraction(height[classes[v]]) for v in net.nodes})


def is_time_consistent(net: LgtNetwork) -> bool:
    return isinstance(check_time_consistency(net), TimeMap)
