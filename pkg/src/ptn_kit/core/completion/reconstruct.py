"""
Heuristic PTN reconstruction from a matrix alone.

Taxa are inserted one at a time, in matrix order, on the tree edge that keeps
the total number of Fitch first-appearance nodes smallest (first edge in
pre-order wins ties). The resulting tree is completed with its Fitch labeling
and, by default, pruned.
"""

from typing import Dict, FrozenSet, Mapping

from oarc_log import log

from ptn_kit.core.completion.greedy import CompletionReport, complete
from ptn_kit.core.completion.pruning import prune_transfers
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import NetworkBuilder, NodeId, Tree, build_tree
from ptn_kit.utils.errors import EmptyMatrix


def first_appearance_total(tree: Tree, rows: Mapping[str, FrozenSet[str]]) -> int:
    """Sum over characters of |A_c| under the Fitch labeling, for a tree on a subset of taxa."""
    labels: Dict[NodeId, FrozenSet[str]] = {}
    total = 0
    for v in tree.post_order():
        if v in tree.sigma:
            labels[v] = rows[tree.sigma[v]]
        else:
            labels[v] = frozenset.intersection(*(labels[u] for u in tree.support_children(v)))
        for u in tree.support_children(v):
            total += len(labels[u] - labels[v])
    return total + len(labels[tree.root])


def insertion_tree(matrix: CharacterMatrix) -> Tree:
    """Greedy taxon-insertion tree minimising the Fitch first-appearance total."""
    if not matrix.taxa:
        raise EmptyMatrix("Cannot reconstruct a network for a matrix without taxa")
    rows = matrix.as_sets()
    taxa = list(matrix.taxa)

    tree = build_tree([0], [], {0: taxa[0]})
    for taxon in taxa[1:]:
        best = None
        best_total = None
        for v in tree.pre_order():
            builder = NetworkBuilder(tree)
            builder.graft(v, taxon)
            candidate = builder.freeze(Tree)
            total = first_appearance_total(candidate, rows)
            if best_total is None or total < best_total:
                best, best_total = candidate, total
        log.debug(f"Inserted taxon {taxon!r}: first-appearance total {best_total}")
        tree = best
    return tree


def reconstruct(matrix: CharacterMatrix, prune: bool = True, threads: int = 1) -> CompletionReport:
    """Build a base tree by greedy insertion, complete it with Fitch, then prune.

    Args:
        matrix: The character matrix
        prune: Run prune_transfers on the completion
        threads: Worker threads for pruning

    Returns:
        The completion report for the reconstructed network

    Raises:
        EmptyMatrix: the matrix has no taxa
    """
    tree = insertion_tree(matrix)
    report = complete(tree, matrix)
    if prune:
        report = prune_transfers(report, matrix, threads=threads)
    log.info(f"Reconstructed a PTN with {report.transfer_count} transfer(s) "
             f"for {matrix.n_taxa} taxa")
    return report
