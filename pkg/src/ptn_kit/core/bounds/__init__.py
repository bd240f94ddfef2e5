"""Worst-case generators and transfer-count bounds."""

from ptn_kit.core.bounds.bounds import (
    approximation_witness,
    completion_bounds,
    fitch_first_appearances,
)
from ptn_kit.core.bounds.instances import caterpillar_instance, greedy_gap_instance
from ptn_kit.core.bounds.worst_case import (
    WorstCaseInstance,
    generate_worst_case,
    lower_bound_power_set,
    power_set_matrix,
    upper_bound_power_set,
)

__all__ = [
    "approximation_witness",
    "completion_bounds",
    "fitch_first_appearances",
    "caterpillar_instance",
    "greedy_gap_instance",
    "WorstCaseInstance",
    "generate_worst_case",
    "lower_bound_power_set",
    "power_set_matrix",
    "upper_bound_power_set",
]
