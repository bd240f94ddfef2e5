"""Transfer-count bounds from Fitch first-appearance nodes."""

from typing import Tuple

from oarc_log import log

from ptn_kit.core.completion.first_appearance import FirstAppearances, first_appearances
from ptn_kit.core.completion.greedy import CompletionReport, initial_time_map
from ptn_kit.core.completion.prelabeling import fitch_labeling
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork


def fitch_first_appearances(tree: LgtNetwork, matrix: CharacterMatrix) -> FirstAppearances:
    """A_c for every matrix character under the Fitch labeling of the tree.

    Args:
        tree: The base tree
        matrix: Character matrix over the tree's taxa

    Returns:
        First-appearance sets ordered by the initial time map

    Raises:
        SigmaMismatch: the tree's taxa differ from the matrix taxa
    """
    labeling = fitch_labeling(tree, matrix)
    return first_appearances(tree, labeling, initial_time_map(tree),
                             characters=matrix.characters)


def completion_bounds(tree: LgtNetwork, matrix: CharacterMatrix) -> Tuple[int, int]:
    """(max_c (|A_c| - 1), sum_c (|A_c| - 1)) under the Fitch labeling.

    Args:
        tree: The base tree
        matrix: Character matrix over the tree's taxa

    Returns:
        The (lower, upper) pair
    """
    found = fitch_first_appearances(tree, matrix)
    return found.lower, found.upper


def approximation_witness(report: CompletionReport) -> bool:
    """transferCount <= |C| * max(1, lower): greedy stays within a factor |C| of optimal."""
    limit = len(report.characters) * max(1, report.lower)
    holds = report.transfer_count <= limit
    if not holds:
        log.warning(f"Transfer count {report.transfer_count} exceeds |C| * max(1, lower) = {limit}")
    return holds
