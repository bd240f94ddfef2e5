"""
Brute-force PTN recognition for small networks.

Each character is decided independently: every node of G - F_c is tried as an
origin, with V_c its reachable set and every larger set closed under
reachability inside G - F_c. A candidate is accepted when the labeling
conditions hold when checked directly on the induced subgraphs.
"""

from typing import Dict, FrozenSet, Iterator, List, Optional, Set

import networkx as nx

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork, NodeId, reachable_set
from ptn_kit.core.recognition.forbidden import forbidden
from ptn_kit.core.recognition.recognizer import NO_ORIGIN, RecognitionResult, Refutation
from ptn_kit.utils.const import DEFAULT_ORACLE_MAX_NODES
from ptn_kit.utils.errors import TooLarge


def _satisfies(net: LgtNetwork, support: nx.DiGraph, v_c: FrozenSet[NodeId],
               leaves_with: FrozenSet[NodeId]) -> bool:
    if frozenset(v for v in v_c if v in net.leaves) != leaves_with:
        return False
    induced = net.graph.subgraph(v_c)
    if not nx.is_weakly_connected(induced):
        return False
    if sum(1 for v in induced.nodes if induced.in_degree(v) == 0) != 1:
        return False
    if v_c == net.nodes:
        return True
    lacking = net.nodes - v_c
    return net.root in lacking and nx.is_weakly_connected(support.subgraph(lacking))


def _closed_supersets(base: FrozenSet[NodeId],
                      reach: Dict[NodeId, FrozenSet[NodeId]]) -> Iterator[FrozenSet[NodeId]]:
    """base, then every strictly larger union of base with reachable sets."""
    seen: Set[FrozenSet[NodeId]] = {base}
    queue: List[FrozenSet[NodeId]] = [base]
    while queue:
        current = queue.pop(0)
        yield current
        for u in sorted(reach):
            if u in current:
                continue
            grown = current | reach[u]
            if grown not in seen:
                seen.add(grown)
                queue.append(grown)


def explain_character_exhaustive(net: LgtNetwork, matrix: CharacterMatrix, character: str,
                                 support: nx.DiGraph) -> Optional[FrozenSet[NodeId]]:
    """Some V_c satisfying the conditions for one character, or None."""
    taxa = matrix.taxa_with(character)
    leaves_with = frozenset(v for v in net.leaves if net.sigma[v] in taxa)
    if not leaves_with:
        return frozenset()

    banned = forbidden(net, matrix, character)
    remaining = sorted(net.nodes - banned)
    reach = {v: reachable_set(net, v, banned) for v in remaining}

    tried: Set[FrozenSet[NodeId]] = set()
    for v in remaining:
        if reach[v] not in tried:
            tried.add(reach[v])
            if _satisfies(net, support, reach[v], leaves_with):
                return reach[v]
    for v in remaining:
        for candidate in _closed_supersets(reach[v], reach):
            if candidate in tried:
                continue
            tried.add(candidate)
            if _satisfies(net, support, candidate, leaves_with):
                return candidate
    log.debug(f"Exhaustive search: {len(tried)} candidate sets fail for {character!r}")
    return None


def recognize_exhaustive(net: LgtNetwork, matrix: CharacterMatrix,
                         max_nodes: int = DEFAULT_ORACLE_MAX_NODES,
                         collect_all: bool = False) -> RecognitionResult:
    """Reference recognizer; agrees with recognize on every input both accept.

    Args:
        net: The network to test
        matrix: Character matrix over the network's taxa
        max_nodes: Largest network accepted
        collect_all: Keep going after the first refuted character

    Returns:
        A RecognitionResult shaped like the one recognize returns

    Raises:
        TooLarge: the network has more than max_nodes nodes
        SigmaMismatch: the network's taxa differ from the matrix taxa
    """
    if len(net.nodes) > max_nodes:
        raise TooLarge(f"Exhaustive recognition is limited to {max_nodes} nodes "
                       f"(network has {len(net.nodes)})", nodes=len(net.nodes))
    matrix.check_sigma(net)

    support = nx.DiGraph()
    support.add_nodes_from(net.nodes)
    support.add_edges_from(net.support_edges)

    labels: Dict[NodeId, Set[str]] = {v: set() for v in net.nodes}
    origins: Dict[str, Optional[NodeId]] = {}
    refutations: List[Refutation] = []
    for character in matrix.characters:
        v_c = explain_character_exhaustive(net, matrix, character, support)
        if v_c is None:
            taxa = matrix.taxa_with(character)
            refutations.append(Refutation(
                character, NO_ORIGIN,
                frozenset(v for v in net.leaves if net.sigma[v] in taxa),
            ))
            if not collect_all:
                break
            continue
        induced = net.graph.subgraph(v_c)
        sources = [v for v in sorted(v_c) if induced.in_degree(v) == 0]
        origins[character] = sources[0] if sources else None
        for v in v_c:
            labels[v].add(character)

    if refutations:
        return RecognitionResult(labeling=None, refutations=tuple(refutations), origins=origins)
    return RecognitionResult(labeling=CLabeling(labels), origins=origins)
