"""
Greedy tree completion.

Starting from a tree and a no-loss pre-labeling, each character's
first-appearance nodes are chained from oldest to youngest: the older one
passes the character to the younger one through a transfer whose donor lies
below it and co-exists with the recipient's incoming edge. New endpoints get a
time halfway between the recipient and the younger of the two parents, so the
network stays time consistent after every insertion.

Usage:
    report = complete(tree, matrix)                 # Fitch pre-labeling
    report = complete(tree, matrix, prelabeling)    # any no-loss pre-labeling
    report.transfer_count, report.lower, report.upper
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Set, Tuple

from oarc_log import log

from ptn_kit.core.completion.first_appearance import first_appearances
from ptn_kit.core.completion.prelabeling import fitch_labeling
from ptn_kit.core.model.labeling import CLabeling, TimeMap
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import Edge, LgtNetwork, NetworkBuilder, NodeId, Tree, as_tree

InsertHook = Callable[[LgtNetwork, TimeMap, Edge], None]


@dataclass(frozen=True)
class CompletionReport:
    """A completed network with its explaining labeling and time map.

    ``first_appearance_counts``, ``lower`` and ``upper`` describe the
    pre-labeling on the input tree; ``fitch_lower`` and ``fitch_upper`` are
    the completion bounds of the Fitch labeling, which every completion of
    the tree respects. ``pruned_from`` is the transfer count before pruning,
    or None if the report was not pruned.
    """

    tree: Tree
    network: LgtNetwork
    labeling: CLabeling
    time_map: TimeMap
    characters: Tuple[str, ...]
    first_appearance_counts: Mapping[str, int]
    lower: int
    upper: int
    fitch_lower: int
    fitch_upper: int
    prelabeling: str = "fitch"
    pruned_from: Optional[int] = None
    steps: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def transfer_count(self) -> int:
        return len(self.network.transfer_edges)

    def to_report(self) -> dict:
        report = {
            "command": "complete",
            "transferCount": self.transfer_count,
            "lowerBound": self.fitch_lower,
            "upperBound": self.fitch_upper,
            "prelabeling": self.prelabeling,
            "characters": list(self.characters),
            "firstAppearances": {c: self.first_appearance_counts[c] for c in self.characters},
            "nodes": len(self.network.nodes),
            "pruned": self.pruned_from is not None,
        }
        if self.prelabeling != "fitch":
            report["prelabelingLowerBound"] = self.lower
            report["prelabelingUpperBound"] = self.upper
        if self.pruned_from is not None:
            report["transferCountBeforePruning"] = self.pruned_from
        return report


def initial_time_map(tree: LgtNetwork) -> TimeMap:
    """Leaves at 0, internal nodes at their post-order rank among internal nodes (1, 2, ...)."""
    times: Dict[NodeId, Fraction] = {}
    rank = 0
    for v in tree.post_order():
        if v in tree.leaves:
            times[v] = Fraction(0)
        else:
            rank += 1
            times[v] = Fraction(rank)
    return TimeMap(times)


class _Completion:
    """Mutable state of one greedy run."""

    def __init__(self, tree: Tree, prelabeling: CLabeling, on_insert: Optional[InsertHook]):
        self.builder = NetworkBuilder(tree)
        self.labels: Dict[NodeId, Set[str]] = {v: set(prelabeling[v]) for v in tree.nodes}
        self.tau: Dict[NodeId, Fraction] = dict(initial_time_map(tree))
        self.on_insert = on_insert
        self.steps: List[str] = []

    def parent(self, v: NodeId) -> Optional[NodeId]:
        return self.builder.support_parent(v)

    def first_appearance_order(self, character: str) -> List[NodeId]:
        found = [v for v, cs in self.labels.items()
                 if character in cs
                 and (self.parent(v) is None or character not in self.labels[self.parent(v)])]
        return sorted(found, key=lambda v: (-self.tau[v], v))

    def descendants_or_self(self, v: NodeId) -> Set[NodeId]:
        found = set()
        stack = [v]
        while stack:
            u = stack.pop()
            found.add(u)
            stack.extend(self.builder.children[u])
        return found

    def reusable_donor(self, character: str, older_parent: NodeId,
                       younger_parent: NodeId) -> Optional[NodeId]:
        """Oldest existing donor below older_parent that already sends into younger_parent."""
        below = self.descendants_or_self(older_parent)
        donors = [w for w, a in self.builder.transfers
                  if a == younger_parent and w in below
                  and (character in self.labels[w] or w == older_parent)]
        if not donors:
            return None
        return min(donors, key=lambda w: (-self.tau[w], w))

    def donor_edge(self, older: NodeId, younger: NodeId) -> Tuple[NodeId, NodeId]:
        """Support edge (w', w) below older's parent with tau(w') > tau(younger) >= tau(w)."""
        limit = self.tau[younger]
        w_parent, w = self.parent(older), older
        while self.tau[w] > limit:
            children = self.builder.support_children(w)
            assert children, f"no donor edge below {older} for recipient {younger}"
            w_parent, w = w, max(children, key=lambda u: (self.tau[u], -u))
        assert self.tau[w_parent] > limit >= self.tau[w]
        return w_parent, w

    def connect(self, character: str, older: NodeId, younger: NodeId) -> None:
        older_parent = self.parent(older)
        younger_parent = self.parent(younger)

        reused = self.reusable_donor(character, older_parent, younger_parent)
        if reused is not None:
            self.labels[reused].add(character)
            self.labels[younger_parent].add(character)
            self.steps.append(f"{character}: reuse {reused} -> {younger_parent}")
            log.debug(f"Character {character!r}: reusing transfer {reused} -> {younger_parent}")
            return

        w_parent, w = self.donor_edge(older, younger)
        time = (min(self.tau[w_parent], self.tau[younger_parent]) + self.tau[younger]) / 2

        w_hat, a_hat = self.builder.insert_transfer(w, younger)
        self.labels[w_hat] = (self.labels[w] & self.labels[w_parent]) | {character}
        self.labels[a_hat] = (self.labels[younger_parent] & self.labels[younger]) | {character}
        self.tau[w_hat] = self.tau[a_hat] = time
        self.steps.append(f"{character}: insert {w_hat} -> {a_hat} above ({w}, {younger})")
        log.debug(f"Character {character!r}: transfer {w_hat} -> {a_hat} at time {time}")

        if self.on_insert is not None:
            self.on_insert(self.builder.freeze(), TimeMap(self.tau), (w_hat, a_hat))

    def run(self, characters) -> None:
        for character in characters:
            order = self.first_appearance_order(character)
            log.debug(f"Character {character!r}: {len(order)} first-appearance node(s)")
            for older, younger in zip(order, order[1:]):
                self.connect(character, older, younger)


def complete(tree: LgtNetwork, matrix: CharacterMatrix,
             prelabeling: Optional[CLabeling] = None,
             on_insert: Optional[InsertHook] = None,
             prelabeling_name: Optional[str] = None) -> CompletionReport:
    """Add time-consistent transfers to the tree until it explains the matrix.

    ``prelabeling`` defaults to the Fitch labeling. ``on_insert`` is called
    with the network, the time map and the new transfer after every insertion.

    Args:
        tree: The tree to complete
        matrix: Character matrix over the tree's taxa
        prelabeling: No-loss labeling to start from; the Fitch labeling if None
        on_insert: Optional callback run after each inserted transfer
        prelabeling_name: Name recorded in the report

    Returns:
        A CompletionReport with the network, its labeling, times and bounds

    Raises:
        SigmaMismatch: the tree's taxa differ from the matrix taxa
        InvalidPrelabeling: the pre-labeling is not no-loss or disagrees at a leaf
    """
    tree = as_tree(tree)
    matrix.check_sigma(tree)
    fitch = fitch_labeling(tree, matrix)
    if prelabeling is None:
        prelabeling = fitch
        prelabeling_name = prelabeling_name or "fitch"
    prelabeling.check_prelabeling(tree, matrix)

    times = initial_time_map(tree)
    before = first_appearances(tree, prelabeling, times, characters=matrix.characters)
    bounds = before if prelabeling is fitch else first_appearances(
        tree, fitch, times, characters=matrix.characters)

    state = _Completion(tree, prelabeling, on_insert)
    state.run(matrix.characters)

    network = state.builder.freeze()
    report = CompletionReport(
        tree=tree,
        network=network,
        labeling=CLabeling(state.labels),
        time_map=TimeMap(state.tau),
        characters=tuple(matrix.characters),
        first_appearance_counts=before.counts(),
        lower=before.lower,
        upper=before.upper,
        fitch_lower=bounds.lower,
        fitch_upper=bounds.upper,
        prelabeling=prelabeling_name or "custom",
        steps=tuple(state.steps),
    )
    log.info(f"Completed {tree!r} with {report.transfer_count} transfer(s) "
             f"(bounds {report.fitch_lower}..{report.fitch_upper})")
    return report
