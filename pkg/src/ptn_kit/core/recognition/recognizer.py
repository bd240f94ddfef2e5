"""
PTN recognition.

For every character the nodes forced to lack it are removed. The network is a
PTN iff, for every character, some source of what remains reaches every leaf
that has the character; the reachable set of that source is then labeled.

Usage:
    result = recognize(net, matrix)
    if result:
        result.labeling.nodes_with('a')
    else:
        print(result.refutation.describe())
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

import networkx as nx

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork, NodeId
from ptn_kit.core.recognition.forbidden import forbidden

DISCONNECTED = "disconnected"
NO_ORIGIN = "no-origin"


@dataclass(frozen=True)
class Refutation:
    """Why a character cannot be explained.

    ``leaves`` are the leaves of G - F_c, i.e. the leaves having the character,
    which no single source of G - F_c reaches jointly. ``sources`` lists the
    in-degree-0 nodes of G - F_c that were tried.
    """

    character: str
    reason: str
    leaves: FrozenSet[NodeId]
    sources: Tuple[NodeId, ...] = ()

    def describe(self, net: Optional[LgtNetwork] = None) -> str:
        names = sorted(net.name(v) if net is not None else str(v) for v in self.leaves)
        if self.reason == DISCONNECTED:
            return (f"character {self.character!r}: G - F_c is disconnected, "
                    f"leaves {names} cannot share one origin")
        return (f"character {self.character!r}: none of the sources {list(self.sources)} "
                f"reaches all of the leaves {names}")


@dataclass(frozen=True)
class RecognitionResult:
    """Either an explaining labeling or the refutations found.

    Truthy iff the network is a PTN.
    """

    labeling: Optional[CLabeling]
    refutations: Tuple[Refutation, ...] = ()
    origins: Mapping[str, Optional[NodeId]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.labeling is not None

    @property
    def is_ptn(self) -> bool:
        return self.labeling is not None

    @property
    def refutation(self) -> Optional[Refutation]:
        return self.refutations[0] if self.refutations else None


CharacterOutcome = Tuple[str, Union[Tuple[Optional[NodeId], FrozenSet[NodeId]], Refutation]]


def explain_character(net: LgtNetwork, matrix: CharacterMatrix,
                      character: str) -> CharacterOutcome:
    """Origin and V_c for one character, or a Refutation.

    A character no taxon has is explained by V_c = {} with origin None.

    Args:
        net: The network
        matrix: Character matrix over the network's taxa
        character: The matrix column to explain

    Returns:
        (character, (origin, V_c)) on success, else (character, Refutation)
    """
    taxa = matrix.taxa_with(character)
    leaves_with = frozenset(v for v in net.leaves if net.sigma[v] in taxa)
    if not leaves_with:
        log.warning(f"Character {character!r} is possessed by no taxon; explained vacuously")
        return character, (None, frozenset())

    banned = forbidden(net, matrix, character)
    view = nx.restricted_view(net.graph, banned, [])

    if not nx.is_weakly_connected(view):
        log.debug(f"Character {character!r}: G - F_c is not connected")
        return character, Refutation(character, DISCONNECTED, leaves_with)

    sources = tuple(sorted(v for v in view.nodes if view.in_degree(v) == 0))
    for source in sources:
        reached = frozenset(nx.descendants(view, source)) | {source}
        if leaves_with <= reached:
            log.debug(f"Character {character!r}: origin {source}, {len(reached)} nodes labeled")
            return character, (source, reached)

    log.debug(f"Character {character!r}: no source among {list(sources)} reaches every leaf")
    return character, Refutation(character, NO_ORIGIN, leaves_with, sources)


def recognize(net: LgtNetwork, matrix: CharacterMatrix, threads: int = 1,
              collect_all: bool = False) -> RecognitionResult:
    """Decide whether (net, sigma) is a PTN for the matrix.

    Characters are handled in matrix column order. With ``threads`` > 1 they
    are explained in parallel and merged in column order, so the result does
    not depend on the thread count. Without ``collect_all`` the first failing
    character ends the run.

    Args:
        net: The network to test
        matrix: Character matrix over the network's taxa
        threads: Worker threads for per-character work
        collect_all: Keep going after the first refuted character

    Returns:
        A RecognitionResult holding the labeling, or the refutations found

    Raises:
        SigmaMismatch: the network's taxa differ from the matrix taxa
    """
    matrix.check_sigma(net)
    log.debug(f"Recognizing {net!r} against {matrix!r}")

    characters = list(matrix.characters)
    if threads > 1 and len(characters) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda c: explain_character(net, matrix, c), characters))
    else:
        outcomes = []
        for c in characters:
            outcome = explain_character(net, matrix, c)
            outcomes.append(outcome)
            if isinstance(outcome[1], Refutation) and not collect_all:
                break

    labels: Dict[NodeId, set] = {v: set() for v in net.nodes}
    origins: Dict[str, Optional[NodeId]] = {}
    refutations: List[Refutation] = []
    for character, outcome in outcomes:
        if isinstance(outcome, Refutation):
            refutations.append(outcome)
            if not collect_all:
                break
            continue
        origin, nodes = outcome
        origins[character] = origin
        for v in nodes:
            labels[v].add(character)

    if refutations:
        log.debug(f"Not a PTN: {len(refutations)} character(s) refuted")
        return RecognitionResult(labeling=None, refutations=tuple(refutations), origins=origins)
    return RecognitionResult(labeling=CLabeling(labels), origins=origins)


def is_ptn(net: LgtNetwork, matrix: CharacterMatrix) -> bool:
    return recognize(net, matrix).is_ptn
