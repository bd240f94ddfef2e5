"""Greedy tree completion, pruning and heuristic reconstruction."""

from ptn_kit.core.completion.first_appearance import FirstAppearances, first_appearances
from ptn_kit.core.completion.greedy import CompletionReport, complete, initial_time_map
from ptn_kit.core.completion.prelabeling import (
    fitch_labeling,
    leaf_only_labeling,
    random_no_loss_labeling,
)
from ptn_kit.core.completion.pruning import prune_transfers
from ptn_kit.core.completion.reconstruct import insertion_tree, reconstruct

__all__ = [
    "FirstAppearances",
    "first_appearances",
    "CompletionReport",
    "complete",
    "initial_time_map",
    "fitch_labeling",
    "leaf_only_labeling",
    "random_no_loss_labeling",
    "prune_transfers",
    "insertion_tree",
    "reconstruct",
]
