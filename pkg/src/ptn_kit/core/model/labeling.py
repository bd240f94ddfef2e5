"""
Character labelings and time maps over a network.

A CLabeling maps every node to the set of characters it possesses; a TimeMap
assigns every node an exact dyadic time that witnesses time consistency.
"""

from fractions import Fraction
from types import MappingProxyType
from typing import FrozenSet, Iterable, Iterator, List, Mapping, Tuple, Union

from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import Edge, LgtNetwork, NodeId
from ptn_kit.utils.errors import (
    InvalidPrelabeling,
    LabelingDomainError,
    NotNoLoss,
    ParseError,
)


class CLabeling(Mapping[NodeId, FrozenSet[str]]):
    """Immutable map node -> character set."""

    def __init__(self, labels: Mapping[NodeId, Iterable[str]]):
        self._labels = MappingProxyType({int(v): frozenset(cs) for v, cs in labels.items()})

    @classmethod
    def empty(cls, net: LgtNetwork) -> "CLabeling":
        return cls({v: () for v in net.nodes})

    def __getitem__(self, v: NodeId) -> FrozenSet[str]:
        return self._labels[v]

    def __iter__(self) -> Iterator[NodeId]:
        return iter(sorted(self._labels))

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        return f"CLabeling({len(self._labels)} nodes)"

    def characters_at(self, v: NodeId) -> FrozenSet[str]:
        return self._labels.get(v, frozenset())

    def nodes_with(self, character: str) -> FrozenSet[NodeId]:
        """V_c: nodes that possess the character."""
        return frozenset(v for v, cs in self._labels.items() if character in cs)

    def nodes_without(self, character: str) -> FrozenSet[NodeId]:
        """The complement of V_c within the labeled nodes."""
        return frozenset(v for v, cs in self._labels.items() if character not in cs)

    @property
    def characters(self) -> FrozenSet[str]:
        return frozenset().union(*self._labels.values()) if self._labels else frozenset()

    def restricted_to(self, nodes: Iterable[NodeId]) -> "CLabeling":
        keep = set(nodes)
        return CLabeling({v: cs for v, cs in self._labels.items() if v in keep})

    def with_character(self, nodes: Iterable[NodeId], character: str) -> "CLabeling":
        """Copy with the character added to the given nodes."""
        targets = set(nodes)
        return CLabeling({v: (cs | {character}) if v in targets else cs
                          for v, cs in self._labels.items()})

    def check_domain(self, net: LgtNetwork) -> None:
        if set(self._labels) != set(net.nodes):
            missing = sorted(set(net.nodes) - set(self._labels))
            extra = sorted(set(self._labels) - set(net.nodes))
            raise LabelingDomainError(
                f"Labeling domain differs from the network's nodes "
                f"(missing: {missing[:10]}, extra: {extra[:10]})",
                missing=tuple(missing), extra=tuple(extra),
            )

    def loss_edges(self, net: LgtNetwork) -> List[Tuple[Edge, FrozenSet[str]]]:
        """Support edges (u, v) with characters in l(u) but not in l(v)."""
        lost = []
        for u, v in sorted(net.support_edges):
            missing = self.characters_at(u) - self.characters_at(v)
            if missing:
                lost.append(((u, v), missing))
        return lost

    def check_no_loss(self, net: LgtNetwork) -> None:
        """Raise NotNoLoss with the first support edge that drops a character."""
        lost = self.loss_edges(net)
        if lost:
            edge, characters = lost[0]
            raise NotNoLoss(edge, characters)

    def leaf_mismatches(self, net: LgtNetwork, matrix: CharacterMatrix) -> List[NodeId]:
        return sorted(v for v in net.leaves
                      if self.characters_at(v) != matrix.characters_of(net.sigma[v]))

    def check_prelabeling(self, net: LgtNetwork, matrix: CharacterMatrix) -> None:
        """Check that this is a valid pre-labeling of net.

        Args:
            net: The tree being completed
            matrix: Character matrix the leaves must agree with

        Raises:
            InvalidPrelabeling: if the labeling misses nodes, loses a character
                along an edge, uses unknown characters or disagrees with a leaf
        """
        try:
            self.check_domain(net)
        except LabelingDomainError as e:
            raise InvalidPrelabeling(e.message)
        lost = self.loss_edges(net)
        if lost:
            edge, characters = lost[0]
            raise InvalidPrelabeling(
                f"Pre-labeling loses {sorted(characters)} along edge {edge}", edge=edge)
        unknown = self.characters - set(matrix.characters)
        if unknown:
            raise InvalidPrelabeling(f"Pre-labeling uses unknown characters {sorted(unknown)}")
        bad = self.leaf_mismatches(net, matrix)
        if bad:
            v = bad[0]
            raise InvalidPrelabeling(
                f"Pre-labeling of leaf {net.sigma[v]!r} disagrees with the matrix", node=v)


Time = Fraction


def is_dyadic(value: Fraction) -> bool:
    d = value.denominator
    return d & (d - 1) == 0


def format_time(value: Fraction) -> str:
    """Exact 'p/2^q' text for a dyadic rational."""
    value = Fraction(value)
    if not is_dyadic(value):
        raise ValueError(f"{value} is not a dyadic rational")
    q = value.denominator.bit_length() - 1
    return f"{value.numerator}/2^{q}"


def parse_time(text: str) -> Fraction:
    """Inverse of format_time; plain integers are accepted too.

    Args:
        text: A time such as "3/2^1" or "2"

    Returns:
        The exact time

    Raises:
        ParseError: if text is not of the form p/2^q
    """
    raw = text.strip()
    try:
        if "/" not in raw:
            return Fraction(int(raw))
        numerator, denominator = raw.split("/", 1)
        if not denominator.startswith("2^"):
            raise ValueError(raw)
        return Fraction(int(numerator), 2 ** int(denominator[2:]))
    except ValueError:
        raise ParseError(f"Time {text!r} is not of the form p/2^q")


class TimeMap(Mapping[NodeId, Fraction]):
    """Immutable map node -> exact dyadic time."""

    def __init__(self, times: Mapping[NodeId, Union[int, Fraction]]):
        converted = {}
        for v, t in times.items():
            t = Fraction(t)
            if not is_dyadic(t):
                raise ValueError(f"Time {t} of node {v} is not dyadic")
            converted[int(v)] = t
        self._times = MappingProxyType(converted)

    def __getitem__(self, v: NodeId) -> Fraction:
        return self._times[v]

    def __iter__(self) -> Iterator[NodeId]:
        return iter(sorted(self._times))

    def __len__(self) -> int:
        return len(self._times)

    def __repr__(self) -> str:
        return f"TimeMap({len(self._times)} nodes)"

    def violations(self, net: LgtNetwork) -> List[str]:
        """Human-readable reasons this map does not witness time consistency of net."""
        problems = []
        if set(self._times) != set(net.nodes):
            problems.append("time map domain differs from the network's nodes")
            return problems
        for u, v in sorted(net.support_edges):
            if not self._times[u] > self._times[v]:
                problems.append(f"support edge ({u}, {v}) does not go back in time")
        for u, v in sorted(net.transfer_edges):
            if self._times[u] != self._times[v]:
                problems.append(f"transfer edge ({u}, {v}) joins different times")
        return problems

    def is_consistent_with(self, net: LgtNetwork) -> bool:
        return not self.violations(net)

    def leaves_at_zero(self, net: LgtNetwork) -> bool:
        return all(self._times.get(v) == 0 for v in net.leaves)

    def formatted(self) -> dict:
        return {v: format_time(t) for v, t in self._times.items()}

