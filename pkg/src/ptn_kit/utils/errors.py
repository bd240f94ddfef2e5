"""
Exception hierarchy for ptn-kit.

Every error raised by the library derives from PtnError, which itself extends
the shared OARCError base so callers already catching OARC errors keep working.
Each class carries the process exit code the CLI reports for it.
"""

from typing import Any, Iterable, Optional, Sequence, Tuple

from oarc_utils.errors import OARCError

from ptn_kit.utils.const import FAILURE, GUARD_EXCEEDED


class PtnError(OARCError):
    """Base class for all ptn-kit errors."""

    exit_code = FAILURE

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self) -> str:
        return self.message


class InputError(PtnError):
    """Invalid input: parse failures, malformed structures, mismatched maps."""


class ParseError(InputError):
    """Text could not be parsed; reports a 1-based line and column."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}", line=line, column=column)
        self.line = line
        self.column = column


class NonBinaryCell(ParseError):
    """A matrix cell holds something other than 0 or 1."""

    def __init__(self, value: str, line: int, column: int):
        super().__init__(f"Matrix cell {value!r} is not 0 or 1", line=line, column=column)
        self.value = value


class DuplicateName(InputError):
    """A taxon, character or node label appears twice."""

    def __init__(self, kind: str, name: str):
        super().__init__(f"Duplicate {kind} name: {name!r}", kind=kind, name=name)
        self.name = name


class EmptyMatrix(InputError):
    """The matrix has no taxa."""


class UnknownLabel(InputError):
    """A transfer line names a label that is not a subdivision node."""

    def __init__(self, label: str, reason: str = "not a subdivision node"):
        super().__init__(f"Unknown transfer label {label!r}: {reason}", label=label)
        self.label = label


class DanglingTransfer(InputError):
    """A transfer line is missing an endpoint or reuses an attachment node."""


class BidirectionalTransfer(InputError):
    """Transfers are directed donor to recipient; two-way notations are rejected."""


class NetworkStructureError(InputError):
    """A network violates one of the structural invariants."""

    def __init__(self, message: str, nodes: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()):
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        super().__init__(message, nodes=self.nodes, edges=self.edges)


class CyclicGraph(NetworkStructureError):
    """The graph over support and transfer edges has a directed cycle."""


class BadDegrees(NetworkStructureError):
    """A node's in/out degree matches none of the allowed node kinds."""


class SupportNotTree(NetworkStructureError):
    """The support edges do not form a spanning tree with the network's leaves."""


class SigmaNotBijection(NetworkStructureError):
    """The leaf-to-taxon map is not a bijection onto the leaves."""


class MultipleRoots(NetworkStructureError):
    """More than one node has in-degree zero."""


class VertexNotFound(InputError):
    """A node id is not part of the network."""

    def __init__(self, node: Any):
        super().__init__(f"Node {node!r} not found in network", node=node)
        self.node = node


class UnknownCharacter(InputError):
    """A character name is not a column of the matrix."""

    def __init__(self, character: str):
        super().__init__(f"Unknown character {character!r}", character=character)
        self.character = character


class SigmaMismatch(InputError):
    """The network's taxa do not match the matrix taxa."""

    def __init__(self, missing: Sequence[str] = (), extra: Sequence[str] = ()):
        parts = []
        if missing:
            parts.append(f"taxa missing from network: {', '.join(sorted(missing))}")
        if extra:
            parts.append(f"taxa not in matrix: {', '.join(sorted(extra))}")
        super().__init__("Sigma does not match the matrix (" + "; ".join(parts) + ")",
                         missing=tuple(missing), extra=tuple(extra))


class LabelingDomainError(InputError):
    """A labeling or time map does not cover exactly the network's nodes."""


class NotNoLoss(InputError):
    """A labeling loses a character along a support edge."""

    def __init__(self, edge: Tuple[int, int], characters: Iterable[str]):
        chars = sorted(characters)
        super().__init__(f"Labeling loses {chars} along support edge {edge}", edge=edge,
                         characters=tuple(chars))
        self.edge = edge
        self.characters = tuple(chars)


class InvalidPrelabeling(InputError):
    """A pre-labeling is not no-loss or disagrees with sigma at a leaf."""


class NoParent(InputError):
    """A transfer endpoint has no support parent (the root)."""

    def __init__(self, node: int):
        super().__init__(f"Node {node} has no support parent and cannot carry a transfer", node=node)
        self.node = node


class GuardExceeded(PtnError):
    """An instance exceeds a configured size guard."""

    exit_code = GUARD_EXCEEDED


class KTooLarge(GuardExceeded):
    """Worst-case generator asked for too many characters."""


class TooLarge(GuardExceeded):
    """Exhaustive search asked to handle too large an instance."""


class Exceeded(GuardExceeded):
    """Exhaustive search found no solution within the transfer budget."""
