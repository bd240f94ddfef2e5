"""First-appearance nodes: where a character shows up below a parent lacking it."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping, Optional, Sequence, Tuple

from ptn_kit.core.model.labeling import CLabeling, TimeMap
from ptn_kit.core.model.network import LgtNetwork, NodeId


@dataclass(frozen=True)
class FirstAppearances:
    """A_c per character and its age order X_c (oldest first, ties by id)."""

    sets: Mapping[str, FrozenSet[NodeId]]
    order: Mapping[str, Tuple[NodeId, ...]]

    def count(self, character: str) -> int:
        return len(self.sets[character])

    def counts(self) -> Dict[str, int]:
        return {c: len(nodes) for c, nodes in self.sets.items()}

    @property
    def total(self) -> int:
        return sum(len(nodes) for nodes in self.sets.values())

    @property
    def lower(self) -> int:
        """max_c (|A_c| - 1), never below 0."""
        return max((max(0, len(nodes) - 1) for nodes in self.sets.values()), default=0)

    @property
    def upper(self) -> int:
        """sum_c (|A_c| - 1) over characters that appear at all."""
        return sum(max(0, len(nodes) - 1) for nodes in self.sets.values())


def first_appearances(net: LgtNetwork, labeling: CLabeling,
                      time_map: Optional[TimeMap] = None,
                      characters: Optional[Sequence[str]] = None) -> FirstAppearances:
    """A_c for each character under a no-loss labeling of the support tree.

    Without a time map X_c is ordered by id only.

    Args:
        net: The support tree
        labeling: A no-loss labeling of net
        time_map: Times used to order X_c
        characters: Characters to report; defaults to the labeling's characters

    Returns:
        FirstAppearances holding A_c and X_c for each character

    Raises:
        NotNoLoss: a support edge drops a character
    """
    labeling.check_no_loss(net)
    if characters is None:
        characters = sorted(labeling.characters)

    def age(v: NodeId):
        return (-time_map[v] if time_map is not None else 0, v)

    sets = {}
    order = {}
    for c in characters:
        found = []
        for v in labeling.nodes_with(c):
            parent = net.support_parent(v)
            if parent is None or c not in labeling.characters_at(parent):
                found.append(v)
        sets[c] = frozenset(found)
        order[c] = tuple(sorted(found, key=age))
    return FirstAppearances(sets=sets, order=order)
