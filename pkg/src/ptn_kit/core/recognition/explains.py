"""
Checks whether a labeling explains a matrix on a network.

Two equivalent condition sets are verified independently:

* the definition: leaves agree with their taxa, no character is lost along a
  support edge, and one node of V_c reaches all of V_c inside G[V_c];
* the characterization: leaves agree, G[V_c] is connected with a unique
  in-degree-0 node, and the support tree restricted to the nodes lacking c
  is connected and contains the root (unless V_c is every node).

A character with an empty V_c satisfies both vacuously.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

import networkx as nx

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import Edge, LgtNetwork, NodeId

LEAF_AGREEMENT = "leaf-agreement"
NO_LOSS = "no-loss"
SINGLE_ORIGIN = "single-origin"
CONNECTED_ORIGIN = "connected-unique-source"
ANCESTOR_CLOSED = "complement-connected-with-root"


@dataclass(frozen=True)
class Violation:
    clause: str
    message: str
    character: str = ""
    nodes: Tuple[NodeId, ...] = ()
    edges: Tuple[Edge, ...] = ()


@dataclass(frozen=True)
class ExplainsResult:
    """Outcome of both condition sets; truthy iff the labeling explains the matrix."""

    definition: Tuple[Violation, ...] = field(default_factory=tuple)
    characterization: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def explains(self) -> bool:
        return not self.definition

    @property
    def violations(self) -> Tuple[Violation, ...]:
        return self.definition + self.characterization

    def __bool__(self) -> bool:
        return self.explains


def _leaf_violations(net: LgtNetwork, matrix: CharacterMatrix,
                     labeling: CLabeling) -> List[Violation]:
    found = []
    for v in sorted(net.leaves):
        taxon = net.sigma[v]
        expected = matrix.characters_of(taxon)
        actual = labeling.characters_at(v)
        if actual != expected:
            found.append(Violation(
                LEAF_AGREEMENT,
                f"leaf {taxon!r} is labeled {sorted(actual)}, its taxon has {sorted(expected)}",
                nodes=(v,),
            ))
    return found


def _characters(matrix: CharacterMatrix, labeling: CLabeling) -> List[str]:
    extra = sorted(labeling.characters - set(matrix.characters))
    return list(matrix.characters) + extra


def _definition_violations(net: LgtNetwork, matrix: CharacterMatrix,
                           labeling: CLabeling) -> List[Violation]:
    found = _leaf_violations(net, matrix, labeling)
    for edge, characters in labeling.loss_edges(net):
        found.append(Violation(
            NO_LOSS, f"support edge {edge} loses {sorted(characters)}",
            character=sorted(characters)[0], edges=(edge,),
        ))
    for c in _characters(matrix, labeling):
        v_c = labeling.nodes_with(c)
        if not v_c:
            continue
        induced = net.graph.subgraph(v_c)
        origins = [v for v in sorted(v_c) if len(nx.descendants(induced, v)) + 1 == len(v_c)]
        if len(origins) != 1:
            sources = tuple(v for v in sorted(v_c) if induced.in_degree(v) == 0)
            found.append(Violation(
                SINGLE_ORIGIN,
                f"character {c!r} has {len(origins)} nodes reaching all of V_c "
                f"(in-degree-0 nodes: {list(sources)})",
                character=c, nodes=sources,
            ))
    return found


def _characterization_violations(net: LgtNetwork, matrix: CharacterMatrix,
                                 labeling: CLabeling) -> List[Violation]:
    found = _leaf_violations(net, matrix, labeling)
    support = nx.DiGraph()
    support.add_nodes_from(net.nodes)
    support.add_edges_from(net.support_edges)

    for c in _characters(matrix, labeling):
        v_c = labeling.nodes_with(c)
        if not v_c:
            continue
        induced = net.graph.subgraph(v_c)
        sources = tuple(v for v in sorted(v_c) if induced.in_degree(v) == 0)
        if not nx.is_weakly_connected(induced) or len(sources) != 1:
            found.append(Violation(
                CONNECTED_ORIGIN,
                f"G[V_c] for {c!r} is not connected with a unique in-degree-0 node "
                f"(in-degree-0 nodes: {list(sources)})",
                character=c, nodes=sources,
            ))

        if v_c == net.nodes:
            continue
        lacking: FrozenSet[NodeId] = net.nodes - v_c
        rest = support.subgraph(lacking)
        if net.root not in lacking or not nx.is_weakly_connected(rest):
            found.append(Violation(
                ANCESTOR_CLOSED,
                f"support tree on the nodes lacking {c!r} is not connected through the root",
                character=c, nodes=tuple(sorted(lacking))[:10],
            ))
    return found


def explains_check(net: LgtNetwork, matrix: CharacterMatrix,
                   labeling: CLabeling) -> ExplainsResult:
    """Verify both condition sets and assert they agree.

    Args:
        net: The network
        matrix: Character matrix over the network's taxa
        labeling: Candidate labeling of every node

    Returns:
        Violations from both condition sets; truthy iff the labeling explains the matrix

    Raises:
        LabelingDomainError: the labeling does not cover exactly the network's nodes
    """
    labeling.check_domain(net)
    definition = tuple(_definition_violations(net, matrix, labeling))
    characterization = tuple(_characterization_violations(net, matrix, labeling))
    assert bool(definition) == bool(characterization), (
        f"condition sets disagree: {definition} vs {characterization}"
    )
    if definition:
        log.debug(f"Labeling does not explain the matrix: {len(definition)} violation(s)")
    return ExplainsResult(definition=definition, characterization=characterization)
