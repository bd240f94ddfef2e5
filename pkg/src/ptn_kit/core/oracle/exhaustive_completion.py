"""
Brute-force minimum completion and reconstruction for toy instances.

A placement of t transfers is a multiset of (donor edge, recipient edge) pairs
of base-tree edges, each edge named by its lower node. Pairs are enumerated in
canonical sorted order, and when several endpoints share an edge every
vertical order is tried. Placements are checked for time consistency first,
then by recognition. Minima are over labeled placements, not up to
isomorphism.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import (
    LgtNetwork,
    NetworkBuilder,
    NodeId,
    Tree,
    as_tree,
    build_tree,
)
from ptn_kit.core.model.timing import Infeasible, check_time_consistency
from ptn_kit.core.recognition.recognizer import recognize
from ptn_kit.utils.const import (
    DEFAULT_ORACLE_MAX_LEAVES,
    DEFAULT_ORACLE_MAX_TRANSFERS,
    DEFAULT_RECONSTRUCT_MAX_TAXA,
)
from ptn_kit.utils.errors import CyclicGraph, Exceeded, TooLarge

Placement = Tuple[Tuple[NodeId, NodeId], ...]


@dataclass(frozen=True)
class OracleSolution:
    count: int
    network: LgtNetwork
    labeling: CLabeling
    placements_checked: int = 0

    def to_report(self, command: str) -> dict:
        return {
            "command": command,
            "transferCount": self.count,
            "nodes": len(self.network.nodes),
            "placementsChecked": self.placements_checked,
        }


def _stackings(placement: Placement) -> Iterator[Dict[NodeId, Tuple[Tuple[int, int], ...]]]:
    """Every bottom-to-top order of the endpoints sharing a base edge.

    Endpoints are (transfer index, role) with role 0 for the donor, 1 for the recipient.
    """
    by_edge: Dict[NodeId, List[Tuple[int, int]]] = {}
    for index, (donor, recipient) in enumerate(placement):
        by_edge.setdefault(donor, []).append((index, 0))
        by_edge.setdefault(recipient, []).append((index, 1))
    edges = sorted(by_edge)
    orders = [list(permutations(by_edge[e])) if len(by_edge[e]) > 1 else [tuple(by_edge[e])]
              for e in edges]
    for choice in product(*orders):
        yield dict(zip(edges, choice))


def place_transfers(tree: Tree, placement: Placement,
                    stacking: Dict[NodeId, Tuple[Tuple[int, int], ...]]) -> Optional[LgtNetwork]:
    """Build the network for one stacked placement, or None if it has a directed cycle."""
    builder = NetworkBuilder(tree)
    endpoints: Dict[Tuple[int, int], NodeId] = {}
    for edge, order in stacking.items():
        below = edge
        for endpoint in order:
            below = builder.subdivide(below)
            endpoints[endpoint] = below
    for index in range(len(placement)):
        builder.transfers.add((endpoints[(index, 0)], endpoints[(index, 1)]))
    try:
        return builder.freeze()
    except CyclicGraph:
        return None


def placements(tree: Tree, t: int) -> Iterator[Placement]:
    edges = sorted(v for v in tree.nodes if v != tree.root)
    pairs = [(d, r) for d in edges for r in edges if d != r]
    return combinations_with_replacement(pairs, t)


def min_completion_exhaustive(tree: LgtNetwork, matrix: CharacterMatrix,
                              max_transfers: int = DEFAULT_ORACLE_MAX_TRANSFERS,
                              max_leaves: int = DEFAULT_ORACLE_MAX_LEAVES,
                              transfer_limit: int = DEFAULT_ORACLE_MAX_TRANSFERS) -> OracleSolution:
    """Fewest transfers that turn the tree into a PTN for the matrix.

    Transfer counts are tried breadth-first from 0, so the answer does not
    lean on the first-appearance bounds and can be checked against them. The
    first placement found at the smallest count is returned.

    Args:
        tree: The base tree
        matrix: Character matrix over the tree's taxa
        max_transfers: Largest transfer count searched
        max_leaves: Largest tree accepted
        transfer_limit: Largest max_transfers accepted

    Returns:
        The optimal count with its network, labeling and placements checked

    Raises:
        TooLarge: more than max_leaves leaves, or max_transfers above transfer_limit
        Exceeded: no completion with at most max_transfers transfers
    """
    tree = as_tree(tree)
    if len(tree.leaves) > max_leaves:
        raise TooLarge(f"Exhaustive completion is limited to {max_leaves} leaves "
                       f"(tree has {len(tree.leaves)})", leaves=len(tree.leaves))
    if max_transfers > transfer_limit:
        raise TooLarge(f"Exhaustive completion is limited to {transfer_limit} transfers "
                       f"(asked for {max_transfers})", max_transfers=max_transfers)
    matrix.check_sigma(tree)

    checked = 0
    for t in range(max_transfers + 1):
        log.debug(f"Exhaustive completion: trying {t} transfer(s)")
        for placement in placements(tree, t):
            for stacking in _stackings(placement):
                net = place_transfers(tree, placement, stacking)
                if net is None or isinstance(check_time_consistency(net), Infeasible):
                    continue
                checked += 1
                result = recognize(net, matrix)
                if result:
                    log.debug(f"Exhaustive completion: {t} transfer(s) after {checked} placements")
                    return OracleSolution(t, net, result.labeling, checked)
    raise Exceeded(f"No completion with at most {max_transfers} transfer(s)",
                   max_transfers=max_transfers)


def enumerate_trees(taxa: Sequence[str]) -> Iterator[Tree]:
    """Every rooted binary tree on the taxa, each once, by successive leaf insertion."""
    if not taxa:
        return

    def grow(tree: Tree, rest: Sequence[str]) -> Iterator[Tree]:
        if not rest:
            yield tree
            return
        for v in tree.pre_order():
            builder = NetworkBuilder(tree)
            builder.graft(v, rest[0])
            yield from grow(builder.freeze(Tree), rest[1:])

    yield from grow(build_tree([0], [], {0: taxa[0]}), list(taxa[1:]))


def min_reconstruction_exhaustive(matrix: CharacterMatrix,
                                  max_transfers: int = DEFAULT_ORACLE_MAX_TRANSFERS,
                                  max_taxa: int = DEFAULT_RECONSTRUCT_MAX_TAXA,
                                  transfer_limit: int = DEFAULT_ORACLE_MAX_TRANSFERS) -> OracleSolution:
    """Minimum over all tree shapes of the minimum completion.

    Args:
        matrix: The character matrix
        max_transfers: Largest transfer count searched per tree
        max_taxa: Largest taxon count accepted
        transfer_limit: Largest max_transfers accepted

    Returns:
        The best solution over every tree shape

    Raises:
        TooLarge: more than max_taxa taxa
        Exceeded: no tree admits a completion within max_transfers
    """
    if matrix.n_taxa > max_taxa:
        raise TooLarge(f"Exhaustive reconstruction is limited to {max_taxa} taxa "
                       f"(matrix has {matrix.n_taxa})", taxa=matrix.n_taxa)
    if max_transfers > transfer_limit:
        raise TooLarge(f"Exhaustive reconstruction is limited to {transfer_limit} transfers "
                       f"(asked for {max_transfers})", max_transfers=max_transfers)

    best: Optional[OracleSolution] = None
    checked = 0
    trees = 0
    for tree in enumerate_trees(matrix.taxa):
        trees += 1
        budget = max_transfers if best is None else best.count - 1
        if budget < 0:
            continue
        try:
            found = min_completion_exhaustive(tree, matrix, budget,
                                              max_leaves=max_taxa,
                                              transfer_limit=transfer_limit)
        except Exceeded:
            continue
        checked += found.placements_checked
        best = found
        if best.count == 0:
            break
    if best is None:
        raise Exceeded(f"No reconstruction with at most {max_transfers} transfer(s)",
                       max_transfers=max_transfers)
    log.debug(f"Exhaustive reconstruction: minimum {best.count} over {trees} tree(s)")
    return OracleSolution(best.count, best.network, best.labeling, checked)
