"""
Two-section network files.

Section one is a Newick string for the support tree in which subdivision
nodes appear as labeled unary nodes; section two, after a ``#TRANSFERS``
line, lists one ``donor -> recipient`` transfer per line:

    ((((A)x,B)p)u,(((C)z,D)q)y)r;
    #TRANSFERS
    x -> y

Node ids are assigned in pre-order of the written tree, and the writer emits
children in id order and transfers sorted by label, so re-serializing a parsed
network is byte-identical.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from oarc_log import log

from ptn_kit.core.model.labeling import CLabeling, TimeMap
from ptn_kit.core.model.network import (
    LgtNetwork,
    NetworkBuilder,
    NodeId,
    Tree,
    as_tree,
    build_network,
)
from ptn_kit.core.storage.dot import network_to_dot
from ptn_kit.core.storage.labeling_io import format_labeling
from ptn_kit.core.storage.naming import node_labels
from ptn_kit.utils.const import (
    BIDIRECTIONAL_ARROWS,
    NAME_PATTERN,
    TRANSFER_ARROW,
    TRANSFERS_SENTINEL,
)
from ptn_kit.utils.errors import (
    BidirectionalTransfer,
    DanglingTransfer,
    DuplicateName,
    NetworkStructureError,
    ParseError,
    UnknownLabel,
)
from ptn_kit.utils.paths import Paths, PathLike

_NAME_CHARS = re.compile(NAME_PATTERN)


@dataclass
class _RawNode:
    name: str = ""
    children: List[int] = None
    offset: int = 0

    def __post_init__(self):
        if self.children is None:
            self.children = []


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _parse_newick(text: str, end: int) -> Tuple[List[_RawNode], int]:
    """Stack-based scan of text[:end]; returns raw nodes and the root index."""
    nodes: List[_RawNode] = []
    stack: List[int] = []
    root: Optional[int] = None
    last_closed: Optional[int] = None
    expect_child = True
    finished = False
    i = 0

    def fail(message: str, at: int):
        line, column = _position(text, at)
        raise ParseError(message, line=line, column=column)

    while i < end:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if finished:
            fail(f"Unexpected {ch!r} after ';'", i)

        if ch == "(":
            if not expect_child:
                fail("Unexpected '('", i)
            nodes.append(_RawNode(offset=i))
            index = len(nodes) - 1
            if stack:
                nodes[stack[-1]].children.append(index)
            elif root is None:
                root = index
            else:
                fail("Newick text has more than one top-level tree", i)
            stack.append(index)
            expect_child = True
            last_closed = None
            i += 1
        elif ch == ",":
            if not stack or expect_child:
                fail("Unexpected ','", i)
            expect_child = True
            last_closed = None
            i += 1
        elif ch == ")":
            if not stack or expect_child:
                fail("Unexpected ')'", i)
            last_closed = stack.pop()
            expect_child = False
            i += 1
        elif ch == ";":
            if stack or root is None or expect_child:
                fail("Unexpected ';'", i)
            finished = True
            i += 1
        elif ch == ":":
            fail("Branch lengths are not supported", i)
        else:
            match = _NAME_CHARS.match(text, i, end)
            if not match:
                fail(f"Unexpected character {ch!r}", i)
            name = match.group(0)
            if last_closed is not None:
                if nodes[last_closed].name:
                    fail("Node has two labels", i)
                nodes[last_closed].name = name
            elif expect_child:
                nodes.append(_RawNode(name=name, offset=i))
                index = len(nodes) - 1
                if stack:
                    nodes[stack[-1]].children.append(index)
                elif root is None:
                    root = index
                else:
                    fail("Newick text has more than one top-level tree", i)
                expect_child = False
            else:
                fail(f"Unexpected label {name!r}", i)
            i = match.end()

    if not finished:
        fail("Newick text must end with ';'", end)
    return nodes, root


def _build_from_newick(text: str, end: int):
    raw, root = _parse_newick(text, end)

    # A bare pair of parentheses around the whole tree only groups it.
    while not raw[root].name and len(raw[root].children) == 1:
        root = raw[root].children[0]

    ids: Dict[int, NodeId] = {}
    order = []
    stack = [root]
    while stack:
        r = stack.pop()
        ids[r] = len(order)
        order.append(r)
        stack.extend(reversed(raw[r].children))

    seen: Dict[str, int] = {}
    sigma: Dict[NodeId, str] = {}
    names: Dict[NodeId, str] = {}
    support = []
    for r in order:
        node = raw[r]
        if node.name:
            if node.name in seen:
                raise DuplicateName("node", node.name)
            seen[node.name] = ids[r]
        if not node.children:
            if not node.name:
                line, column = _position(text, node.offset)
                raise ParseError("Leaf without a name", line=line, column=column)
            sigma[ids[r]] = node.name
        elif node.name:
            names[ids[r]] = node.name
        if len(node.children) > 2:
            line, column = _position(text, node.offset)
            raise ParseError(f"Node has {len(node.children)} children; networks are binary",
                             line=line, column=column)
        for child in node.children:
            support.append((ids[r], ids[child]))
    return list(range(len(order))), support, sigma, names, seen


def _parse_transfers(lines: List[Tuple[int, str]], labels: Dict[str, NodeId],
                     unary: set) -> List[Tuple[NodeId, NodeId]]:
    transfers = []
    used: Dict[NodeId, str] = {}
    for number, line in lines:
        for arrow in BIDIRECTIONAL_ARROWS:
            if arrow in line:
                raise BidirectionalTransfer(
                    f"Transfer notation {arrow!r} is not directed (line {number})", line=number)
        parts = [p.strip() for p in line.split(TRANSFER_ARROW)]
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise DanglingTransfer(f"Transfer line {line!r} needs exactly one donor and "
                                   f"one recipient (line {number})", line=number)
        endpoints = []
        for label in parts:
            if label not in labels:
                raise UnknownLabel(label, "no node carries this label")
            node = labels[label]
            if node not in unary:
                raise UnknownLabel(label)
            if node in used:
                raise DanglingTransfer(
                    f"Node {label!r} already carries a transfer (line {number})", line=number)
            endpoints.append(node)
        if endpoints[0] == endpoints[1]:
            raise DanglingTransfer(f"Transfer from {parts[0]!r} to itself (line {number})",
                                   line=number)
        for node, label in zip(endpoints, parts):
            used[node] = label
        transfers.append((endpoints[0], endpoints[1]))
    return transfers


def parse_network(text: str, normalize: bool = True) -> LgtNetwork:
    """Parse a network file into a validated LgtNetwork.

    Unary nodes that carry no transfer are suppressed with a warning when
    ``normalize`` is set, and kept as subdivision nodes otherwise.

    Args:
        text: Network file contents
        normalize: Suppress unary nodes that carry no transfer

    Returns:
        The validated network

    Raises:
        ParseError, DuplicateName, UnknownLabel, DanglingTransfer,
        BidirectionalTransfer, and every build_network error.
    """
    lines = text.split("\n")
    sentinel = next((i for i, line in enumerate(lines) if line.strip() == TRANSFERS_SENTINEL),
                    None)
    if sentinel is None:
        newick_end = len(text)
        transfer_lines = []
    else:
        newick_end = sum(len(line) + 1 for line in lines[:sentinel])
        transfer_lines = [(i + 1, line.strip()) for i, line in enumerate(lines)
                          if i > sentinel and line.strip()]

    nodes, support, sigma, names, labels = _build_from_newick(text, newick_end)
    children_count: Dict[NodeId, int] = {}
    for u, _ in support:
        children_count[u] = children_count.get(u, 0) + 1
    unary = {v for v, n in children_count.items() if n == 1}
    transfers = _parse_transfers(transfer_lines, labels, unary)

    net = build_network(nodes, support, transfers, sigma, names)
    if normalize:
        builder = NetworkBuilder(net)
        loose = builder.unattached_subdivisions()
        if loose:
            log.warning(f"Suppressing {len(loose)} subdivision node(s) without a transfer: "
                        + ", ".join(names.get(v, str(v)) for v in loose))
            for v in loose:
                builder.suppress(v)
            net = builder.freeze()
    log.debug(f"Parsed {net!r}")
    return net


def parse_tree(text: str) -> Tree:
    """Parse a transfer-free network file as a Tree."""
    net = parse_network(text, normalize=True)
    if net.transfer_edges:
        raise NetworkStructureError("Tree file lists transfers",
                                    edges=sorted(net.transfer_edges))
    return as_tree(net)


def format_network(net: LgtNetwork, labels: Optional[Dict[NodeId, str]] = None) -> str:
    """Network file text; deterministic for equal networks with equal names.

    Args:
        net: The network to write
        labels: Node labels to use; generated by node_labels when omitted

    Returns:
        Newick text of the support tree, then the transfer section if any
    """
    labels = labels or node_labels(net)
    out: List[str] = []
    stack: List[Tuple[NodeId, int]] = [(net.root, 0)]
    while stack:
        v, state = stack.pop()
        children = net.support_children(v)
        if not children:
            out.append(labels[v])
            continue
        if state == len(children):
            out.append(")" + labels[v])
            continue
        out.append("(" if state == 0 else ",")
        stack.append((v, state + 1))
        stack.append((children[state], 0))
    lines = ["".join(out) + ";"]

    if net.transfer_edges:
        lines.append(TRANSFERS_SENTINEL)
        entries = sorted((labels[u], labels[v]) for u, v in net.transfer_edges)
        lines.extend(f"{u} {TRANSFER_ARROW} {v}" for u, v in entries)
    return "\n".join(lines) + "\n"


def format_tree(tree: LgtNetwork) -> str:
    return format_network(tree)


@dataclass(frozen=True)
class SerializedNetwork:
    """Network file, labeling file and DOT text of one network."""

    network: str
    labeling: Optional[str]
    dot: str


def serialize_network(net: LgtNetwork, labeling: Optional[CLabeling] = None,
                      time_map: Optional[TimeMap] = None) -> SerializedNetwork:
    """Render a network with one shared set of node labels.

    Args:
        net: The network
        labeling: Optional labeling to write alongside
        time_map: Optional time map to write alongside

    Returns:
        The network text, the labeling text (None without labels or times) and DOT
    """
    labels = node_labels(net)
    labeling_text = None
    if labeling is not None or time_map is not None:
        labeling_text = format_labeling(net, labeling, time_map, labels)
    return SerializedNetwork(
        network=format_network(net, labels),
        labeling=labeling_text,
        dot=network_to_dot(net, labeling, time_map, labels),
    )


def read_network(path: PathLike, normalize: bool = True) -> LgtNetwork:
    """Read and parse a network file.

    Args:
        path: Path of the network file
        normalize: Suppress unary nodes that carry no transfer

    Returns:
        The validated network
    """
    log.debug(f"Reading network from {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_network(f.read(), normalize=normalize)


def read_tree(path: PathLike) -> Tree:
    log.debug(f"Reading tree from {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_tree(f.read())


def write_text(text: str, path: PathLike) -> None:
    Paths.ensure_parent_dir(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    log.debug(f"Wrote {path}")
