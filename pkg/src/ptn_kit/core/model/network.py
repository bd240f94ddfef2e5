"""
Tree-based (LGT) networks.

An LgtNetwork is a rooted DAG whose edges are split into support edges, which
form a spanning tree with the network's leaves, and transfer edges, which run
from a donor subdivision node to a recipient reticulation. Networks are
immutable; every edit goes through a NetworkBuilder and produces a new,
re-validated network.

Usage:
    net = build_network(
        nodes=[0, 1, 2],
        support_edges=[(0, 1), (0, 2)],
        transfer_edges=[],
        sigma={1: 'X', 2: 'Y'},
    )
    net.root           # 0
    net.kind(1)        # NodeKind.LEAF
    base_tree(net)     # Tree
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

import networkx as nx

from oarc_log import log

from ptn_kit.utils.errors import (
    BadDegrees,
    BidirectionalTransfer,
    CyclicGraph,
    InputError,
    MultipleRoots,
    NetworkStructureError,
    NoParent,
    SigmaNotBijection,
    SupportNotTree,
    VertexNotFound,
)

NodeId = int
Edge = Tuple[NodeId, NodeId]

SUPPORT = "support"
TRANSFER = "transfer"


class NodeKind(str, Enum):
    """Node kinds by (in-degree, out-degree) in the whole network."""

    ROOT = "root"
    TREE = "tree"
    RETICULATION = "reticulation"
    SUBDIVISION = "subdivision"
    LEAF = "leaf"


KIND_BY_DEGREE = {
    (0, 2): NodeKind.ROOT,
    (1, 0): NodeKind.LEAF,
    (1, 2): NodeKind.TREE,
    (2, 1): NodeKind.RETICULATION,
    (1, 1): NodeKind.SUBDIVISION,
}


@dataclass(frozen=True, eq=False)
class LgtNetwork:
    """Validated tree-based network.

    ``names`` optionally carries labels for internal nodes (leaves are named
    by ``sigma``). ``next_id`` is the first id a builder may hand out, so ids
    freed by a removal are never reused by later edits of the same lineage.
    """

    nodes: FrozenSet[NodeId]
    support_edges: FrozenSet[Edge]
    transfer_edges: FrozenSet[Edge]
    sigma: Mapping[NodeId, str]
    names: Mapping[NodeId, str] = field(default_factory=dict)
    next_id: int = 0

    def __post_init__(self):
        nodes = frozenset(int(v) for v in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "support_edges",
                           frozenset((int(u), int(v)) for u, v in self.support_edges))
        object.__setattr__(self, "transfer_edges",
                           frozenset((int(u), int(v)) for u, v in self.transfer_edges))
        object.__setattr__(self, "sigma", MappingProxyType(dict(self.sigma)))
        object.__setattr__(self, "names",
                           MappingProxyType({v: n for v, n in self.names.items() if v in nodes}))
        floor = max(nodes) + 1 if nodes else 0
        object.__setattr__(self, "next_id", max(int(self.next_id), floor))
        self._validate()

    # ------------------------------------------------------------------ #
    # Validation                                                           #
    # ------------------------------------------------------------------ #

    def _validate(self) -> None:
        if not self.nodes:
            raise NetworkStructureError("A network needs at least one node")

        for u, v in sorted(self.support_edges | self.transfer_edges):
            for end in (u, v):
                if end not in self.nodes:
                    raise VertexNotFound(end)

        shared = self.support_edges & self.transfer_edges
        if shared:
            edge = min(shared)
            raise NetworkStructureError(f"Edge {edge} is both a support and a transfer edge",
                                        edges=[edge])

        for u, v in sorted(self.transfer_edges):
            if (v, u) in self.transfer_edges:
                raise BidirectionalTransfer(
                    f"Transfers {u} -> {v} and {v} -> {u} form a bidirectional transfer",
                    edges=((u, v), (v, u)),
                )

        graph = self.graph
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [(u, v) for u, v, *_ in nx.find_cycle(graph)]
            raise CyclicGraph(
                "Network has a directed cycle through " + " -> ".join(str(u) for u, _ in cycle),
                nodes=[u for u, _ in cycle],
                edges=cycle,
            )

        roots = [v for v in sorted(self.nodes) if graph.in_degree(v) == 0]
        if len(roots) > 1:
            raise MultipleRoots(f"Network has {len(roots)} nodes of in-degree 0: {roots}",
                                nodes=roots)

        if len(self.nodes) > 1:
            for v in sorted(self.nodes):
                degree = (graph.in_degree(v), graph.out_degree(v))
                if degree not in KIND_BY_DEGREE:
                    raise BadDegrees(
                        f"Node {v} has in-degree {degree[0]} and out-degree {degree[1]}",
                        nodes=[v],
                    )

        root = roots[0]
        parents: Dict[NodeId, List[NodeId]] = {v: [] for v in self.nodes}
        children: Dict[NodeId, int] = {v: 0 for v in self.nodes}
        for u, v in self.support_edges:
            parents[v].append(u)
            children[u] += 1
        for v in sorted(self.nodes):
            expected = 0 if v == root else 1
            if len(parents[v]) != expected:
                raise SupportNotTree(
                    f"Node {v} has {len(parents[v])} incoming support edges, expected {expected}",
                    nodes=[v],
                )
            if children[v] == 0 and graph.out_degree(v) != 0:
                raise SupportNotTree(
                    f"Node {v} is a leaf of the support tree but not of the network",
                    nodes=[v],
                )
        for u, v in sorted(self.transfer_edges):
            if u == root:
                raise BadDegrees(f"Transfer edge ({u}, {v}) leaves the root",
                                 nodes=[u], edges=[(u, v)])

        leaves = self.leaves
        if set(self.sigma.keys()) != set(leaves):
            extra = sorted(set(self.sigma.keys()) - leaves)
            missing = sorted(leaves - set(self.sigma.keys()))
            raise SigmaNotBijection(
                f"Sigma must map exactly the leaves (unmapped leaves: {missing}, "
                f"non-leaf keys: {extra})",
                nodes=missing + extra,
            )
        taxa = list(self.sigma.values())
        if len(set(taxa)) != len(taxa):
            dupes = sorted({t for t in taxa if taxa.count(t) > 1})
            raise SigmaNotBijection(
                f"Sigma maps several leaves to the same taxon: {dupes}",
                nodes=sorted(v for v, t in self.sigma.items() if t in dupes),
            )

    # ------------------------------------------------------------------ #
    # Cached structure                                                     #
    # ------------------------------------------------------------------ #

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Frozen networkx view with an edge attribute ``kind``."""
        g = nx.DiGraph()
        g.add_nodes_from(sorted(self.nodes))
        g.add_edges_from(sorted(self.support_edges), kind=SUPPORT)
        g.add_edges_from(sorted(self.transfer_edges), kind=TRANSFER)
        return nx.freeze(g)

    @cached_property
    def _support_parent(self) -> Dict[NodeId, NodeId]:
        return {v: u for u, v in self.support_edges}

    @cached_property
    def _support_children(self) -> Dict[NodeId, Tuple[NodeId, ...]]:
        children: Dict[NodeId, List[NodeId]] = {v: [] for v in self.nodes}
        for u, v in self.support_edges:
            children[u].append(v)
        return {v: tuple(sorted(cs)) for v, cs in children.items()}

    @cached_property
    def _transfer_out(self) -> Dict[NodeId, Tuple[NodeId, ...]]:
        out: Dict[NodeId, List[NodeId]] = {}
        for u, v in self.transfer_edges:
            out.setdefault(u, []).append(v)
        return {u: tuple(sorted(vs)) for u, vs in out.items()}

    @cached_property
    def _transfer_in(self) -> Dict[NodeId, Tuple[NodeId, ...]]:
        into: Dict[NodeId, List[NodeId]] = {}
        for u, v in self.transfer_edges:
            into.setdefault(v, []).append(u)
        return {v: tuple(sorted(us)) for v, us in into.items()}

    @cached_property
    def root(self) -> NodeId:
        return next(v for v in sorted(self.nodes) if self.graph.in_degree(v) == 0)

    @cached_property
    def leaves(self) -> FrozenSet[NodeId]:
        return frozenset(v for v in self.nodes if self.graph.out_degree(v) == 0)

    @cached_property
    def kinds(self) -> Mapping[NodeId, NodeKind]:
        if len(self.nodes) == 1:
            return MappingProxyType({self.root: NodeKind.LEAF})
        g = self.graph
        return MappingProxyType({
            v: KIND_BY_DEGREE[(g.in_degree(v), g.out_degree(v))] for v in self.nodes
        })

    @cached_property
    def _pre_order(self) -> Tuple[NodeId, ...]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self._support_children[v]))
        return tuple(order)

    @cached_property
    def _post_order(self) -> Tuple[NodeId, ...]:
        order = []
        stack = [(self.root, False)]
        while stack:
            v, expanded = stack.pop()
            if expanded:
                order.append(v)
                continue
            stack.append((v, True))
            for child in reversed(self._support_children[v]):
                stack.append((child, False))
        return tuple(order)

    # ------------------------------------------------------------------ #
    # Queries                                                              #
    # ------------------------------------------------------------------ #

    def _check(self, v: NodeId) -> None:
        if v not in self.nodes:
            raise VertexNotFound(v)

    def kind(self, v: NodeId) -> NodeKind:
        self._check(v)
        return self.kinds[v]

    @property
    def is_tree(self) -> bool:
        """True if there are no transfers and every internal node is binary."""
        return not self.transfer_edges and not self.subdivision_nodes()

    @property
    def taxa(self) -> FrozenSet[str]:
        return frozenset(self.sigma.values())

    def leaf_of(self, taxon: str) -> NodeId:
        for v, t in self.sigma.items():
            if t == taxon:
                return v
        raise InputError(f"No leaf is mapped to taxon {taxon!r}", taxon=taxon)

    def name(self, v: NodeId) -> Optional[str]:
        """Taxon name for leaves, stored label for internal nodes, else None."""
        if v in self.sigma:
            return self.sigma[v]
        return self.names.get(v)

    def support_parent(self, v: NodeId) -> Optional[NodeId]:
        self._check(v)
        return self._support_parent.get(v)

    def support_children(self, v: NodeId) -> Tuple[NodeId, ...]:
        self._check(v)
        return self._support_children[v]

    def transfers_from(self, v: NodeId) -> Tuple[NodeId, ...]:
        return self._transfer_out.get(v, ())

    def transfers_into(self, v: NodeId) -> Tuple[NodeId, ...]:
        return self._transfer_in.get(v, ())

    def children(self, v: NodeId) -> Tuple[NodeId, ...]:
        self._check(v)
        return tuple(sorted(self.graph.successors(v)))

    def parents(self, v: NodeId) -> Tuple[NodeId, ...]:
        self._check(v)
        return tuple(sorted(self.graph.predecessors(v)))

    def pre_order(self) -> Tuple[NodeId, ...]:
        """Support-tree pre-order, children visited in id order."""
        return self._pre_order

    def post_order(self) -> Tuple[NodeId, ...]:
        """Support-tree post-order, children visited in id order."""
        return self._post_order

    def subdivision_nodes(self) -> FrozenSet[NodeId]:
        """Nodes with exactly one child in the support tree."""
        return frozenset(v for v, cs in self._support_children.items() if len(cs) == 1)

    def support_descendants(self, v: NodeId) -> FrozenSet[NodeId]:
        """All nodes of the support subtree rooted at v, v included."""
        self._check(v)
        found = set()
        stack = [v]
        while stack:
            u = stack.pop()
            found.add(u)
            stack.extend(self._support_children[u])
        return frozenset(found)

    def ancestors_in_support(self, v: NodeId) -> Tuple[NodeId, ...]:
        """Strict support-tree ancestors of v, from its parent up to the root."""
        self._check(v)
        chain = []
        u = self._support_parent.get(v)
        while u is not None:
            chain.append(u)
            u = self._support_parent.get(u)
        return tuple(chain)

    def is_support_ancestor(self, u: NodeId, v: NodeId) -> bool:
        """True if u lies on the support path from the root to v (u == v included)."""
        self._check(u)
        return u == v or u in self.ancestors_in_support(v)

    def support_leaves(self, v: NodeId) -> FrozenSet[NodeId]:
        return frozenset(u for u in self.support_descendants(v) if u in self.leaves)

    # ------------------------------------------------------------------ #
    # Derived networks                                                     #
    # ------------------------------------------------------------------ #

    def with_transfer_removed(self, edge: Edge) -> "LgtNetwork":
        """Drop one transfer edge and suppress the two subdivision nodes it leaves."""
        builder = NetworkBuilder(self)
        builder.remove_transfer(edge)
        return builder.freeze()

    def with_transfer_inserted(self, w: NodeId, a: NodeId) -> "LgtNetwork":
        return insert_transfer(self, w, a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LgtNetwork):
            return NotImplemented
        return (self.nodes == other.nodes and self.support_edges == other.support_edges
                and self.transfer_edges == other.transfer_edges
                and dict(self.sigma) == dict(other.sigma))

    def __hash__(self) -> int:
        return hash((self.nodes, self.support_edges, self.transfer_edges,
                     frozenset(self.sigma.items())))

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(nodes={len(self.nodes)}, "
                f"support={len(self.support_edges)}, transfers={len(self.transfer_edges)})")


@dataclass(frozen=True, eq=False)
class Tree(LgtNetwork):
    """A network without transfers and without subdivision nodes."""

    def __post_init__(self):
        super().__post_init__()
        if self.transfer_edges:
            edge = min(self.transfer_edges)
            raise NetworkStructureError("A tree cannot carry transfer edges", edges=[edge])
        unary = sorted(self.subdivision_nodes())
        if unary:
            raise BadDegrees(f"Tree node {unary[0]} has a single child", nodes=unary)


class NetworkBuilder:
    """Mutable working copy of a network, frozen back into an LgtNetwork.

    Used by the transfer operation, pruning and the io layer's normalisation.
    """

    def __init__(self, net: LgtNetwork):
        self.nodes: Set[NodeId] = set(net.nodes)
        self.parent: Dict[NodeId, NodeId] = dict(net._support_parent)
        self.children: Dict[NodeId, List[NodeId]] = {
            v: list(cs) for v, cs in net._support_children.items()
        }
        self.transfers: Set[Edge] = set(net.transfer_edges)
        self.sigma: Dict[NodeId, str] = dict(net.sigma)
        self.names: Dict[NodeId, str] = dict(net.names)
        self.next_id = net.next_id

    def new_node(self) -> NodeId:
        v = self.next_id
        self.next_id += 1
        self.nodes.add(v)
        self.children[v] = []
        return v

    def support_parent(self, v: NodeId) -> Optional[NodeId]:
        return self.parent.get(v)

    def support_children(self, v: NodeId) -> Tuple[NodeId, ...]:
        return tuple(sorted(self.children[v]))

    def subdivide(self, v: NodeId) -> NodeId:
        """Insert a new node on the incoming support edge of v and return it."""
        if v not in self.nodes:
            raise VertexNotFound(v)
        p = self.parent.get(v)
        if p is None:
            raise NoParent(v)
        s = self.new_node()
        self.children[p] = [s if c == v else c for c in self.children[p]]
        self.parent[s] = p
        self.children[s] = [v]
        self.parent[v] = s
        return s

    def graft(self, v: NodeId, taxon: str) -> NodeId:
        """Attach a new leaf for taxon on the edge above v (above the root: new root)."""
        if v not in self.nodes:
            raise VertexNotFound(v)
        p = self.parent.get(v)
        s = self.new_node()
        leaf = self.new_node()
        self.sigma[leaf] = taxon
        if p is not None:
            self.children[p] = [s if c == v else c for c in self.children[p]]
            self.parent[s] = p
        self.children[s] = [v, leaf]
        self.parent[v] = s
        self.parent[leaf] = s
        return leaf

    def insert_transfer(self, w: NodeId, a: NodeId) -> Tuple[NodeId, NodeId]:
        """Subdivide the edges above w and a and join the new nodes by a transfer.

        Returns the new donor and recipient ids.
        """
        if w == a:
            raise InputError(f"Transfer endpoints must differ (got {w} twice)", node=w)
        for v in (w, a):
            if v not in self.nodes:
                raise VertexNotFound(v)
            if v not in self.parent:
                raise NoParent(v)
        w_hat = self.subdivide(w)
        a_hat = self.subdivide(a)
        self.transfers.add((w_hat, a_hat))
        log.debug(f"Inserted transfer {w_hat} -> {a_hat} above {w} -> {a}")
        return w_hat, a_hat

    def suppress(self, v: NodeId) -> None:
        """Remove a node with one support child and no transfers, re-wiring around it."""
        if len(self.children[v]) != 1 or v not in self.parent:
            raise NetworkStructureError(f"Node {v} cannot be suppressed", nodes=[v])
        if any(v in edge for edge in self.transfers):
            raise NetworkStructureError(f"Node {v} still carries a transfer", nodes=[v])
        p = self.parent.pop(v)
        (child,) = self.children.pop(v)
        self.children[p] = [child if c == v else c for c in self.children[p]]
        self.parent[child] = p
        self.nodes.discard(v)
        self.names.pop(v, None)

    def remove_transfer(self, edge: Edge) -> None:
        """Drop a transfer and suppress both of its endpoints."""
        edge = (int(edge[0]), int(edge[1]))
        if edge not in self.transfers:
            raise InputError(f"{edge} is not a transfer edge", edges=[edge])
        self.transfers.discard(edge)
        for v in edge:
            self.suppress(v)
        log.debug(f"Removed transfer {edge[0]} -> {edge[1]}")

    def unattached_subdivisions(self) -> List[NodeId]:
        attached = {v for edge in self.transfers for v in edge}
        return sorted(v for v in self.nodes
                      if len(self.children[v]) == 1 and v in self.parent and v not in attached)

    def freeze(self, cls=LgtNetwork) -> LgtNetwork:
        support = [(p, c) for c, p in self.parent.items()]
        return cls(
            nodes=frozenset(self.nodes),
            support_edges=frozenset(support),
            transfer_edges=frozenset(self.transfers),
            sigma=self.sigma,
            names=self.names,
            next_id=self.next_id,
        )


# ---------------------------------------------------------------------- #
# Operations                                                               #
# ---------------------------------------------------------------------- #

def build_network(nodes: Iterable[NodeId], support_edges: Iterable[Edge],
                  transfer_edges: Iterable[Edge], sigma: Mapping[NodeId, str],
                  names: Optional[Mapping[NodeId, str]] = None) -> LgtNetwork:
    """Validate raw node/edge lists into an LgtNetwork.

    Args:
        nodes: Node ids
        support_edges: Support (tree) edges as (parent, child)
        transfer_edges: Transfer edges as (donor, recipient)
        sigma: Leaf to taxon map, a bijection onto the leaves
        names: Optional labels for internal nodes

    Returns:
        The validated network

    Raises:
        VertexNotFound, BidirectionalTransfer, CyclicGraph, MultipleRoots,
        BadDegrees, SupportNotTree, SigmaNotBijection
    """
    net = LgtNetwork(
        nodes=frozenset(nodes),
        support_edges=frozenset(support_edges),
        transfer_edges=frozenset(transfer_edges),
        sigma=dict(sigma),
        names=dict(names or {}),
    )
    log.debug(f"Built {net!r}")
    return net


def build_tree(nodes: Iterable[NodeId], edges: Iterable[Edge], sigma: Mapping[NodeId, str],
               names: Optional[Mapping[NodeId, str]] = None) -> Tree:
    """Validate a transfer-free network whose internal nodes are all binary.

    Args:
        nodes: Node ids
        edges: Tree edges as (parent, child)
        sigma: Leaf to taxon map
        names: Optional labels for internal nodes

    Returns:
        The validated tree
    """
    return Tree(
        nodes=frozenset(nodes),
        support_edges=frozenset(edges),
        transfer_edges=frozenset(),
        sigma=dict(sigma),
        names=dict(names or {}),
    )


def as_tree(net: LgtNetwork) -> Tree:
    """Re-type a transfer-free, subdivision-free network as a Tree."""
    if isinstance(net, Tree):
        return net
    return Tree(nodes=net.nodes, support_edges=net.support_edges, transfer_edges=frozenset(),
                sigma=net.sigma, names=net.names, next_id=net.next_id)


def support_tree(net: LgtNetwork) -> LgtNetwork:
    """The support tree (V, E_S), subdivision nodes kept."""
    if not net.transfer_edges:
        return net
    return LgtNetwork(nodes=net.nodes, support_edges=net.support_edges,
                      transfer_edges=frozenset(), sigma=net.sigma, names=net.names,
                      next_id=net.next_id)


def base_tree(net: LgtNetwork) -> Tree:
    """Support tree with every subdivision node suppressed; surviving ids are kept."""
    builder = NetworkBuilder(support_tree(net))
    for v in builder.unattached_subdivisions():
        builder.suppress(v)
    return builder.freeze(Tree)


def reachable_set(net: LgtNetwork, v: NodeId,
                  forbidden: Iterable[NodeId] = frozenset()) -> FrozenSet[NodeId]:
    """R_v(G - forbidden): nodes reachable from v along paths avoiding forbidden.

    Args:
        net: The network to search
        v: Start node
        forbidden: Nodes the paths may not enter

    Returns:
        The reachable nodes, v included; empty when v itself is forbidden

    Raises:
        VertexNotFound: if v is not a node of net
    """
    if v not in net.nodes:
        raise VertexNotFound(v)
    forbidden = frozenset(forbidden)
    if v in forbidden:
        return frozenset()
    view = nx.restricted_view(net.graph, forbidden, [])
    return frozenset(nx.descendants(view, v)) | {v}


def insert_transfer(net: LgtNetwork, w: NodeId, a: NodeId) -> LgtNetwork:
    """G (+) (w, a): subdivide the incoming support edges of w and a, add the transfer.

    Args:
        net: The network to extend; it is not modified
        w: Node whose incoming edge receives the donor
        a: Node whose incoming edge receives the recipient

    Returns:
        A new network with two more nodes and one more transfer

    Raises:
        NoParent: if either endpoint is the root.
    """
    builder = NetworkBuilder(net)
    builder.insert_transfer(w, a)
    return builder.freeze()
