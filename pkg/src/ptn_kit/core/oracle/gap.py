"""Greedy-with-pruning versus exhaustive optimum, per instance and aggregated."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd

from oarc_log import log

from ptn_kit.core.completion.greedy import complete
from ptn_kit.core.completion.pruning import prune_transfers
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork
from ptn_kit.core.oracle.exhaustive_completion import min_completion_exhaustive
from ptn_kit.utils.const import DEFAULT_ORACLE_MAX_TRANSFERS
from ptn_kit.utils.errors import Exceeded


@dataclass
class GapReport:
    rows: List[Dict] = field(default_factory=list)

    @property
    def histogram(self) -> Dict[int, int]:
        counts = Counter(row["gap"] for row in self.rows if row["gap"] is not None)
        return dict(sorted(counts.items()))

    @property
    def unsolved(self) -> int:
        return sum(1 for row in self.rows if row["optimum"] is None)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=["instance", "taxa", "characters", "greedy",
                                                "greedyPruned", "optimum", "gap"])

    def to_report(self) -> dict:
        return {
            "command": "gap",
            "instances": len(self.rows),
            "unsolved": self.unsolved,
            "histogram": {str(gap): n for gap, n in self.histogram.items()},
        }


def gap_distribution(instances: Iterable[Tuple[LgtNetwork, CharacterMatrix]],
                     max_transfers: int = DEFAULT_ORACLE_MAX_TRANSFERS) -> GapReport:
    """Pruned greedy count minus the exhaustive optimum for each instance.

    Instances whose optimum exceeds max_transfers are kept with optimum None.

    Args:
        instances: (tree, matrix) pairs
        max_transfers: Search limit for the exhaustive optimum

    Returns:
        A GapReport with one row per instance
    """
    report = GapReport()
    for index, (tree, matrix) in enumerate(instances):
        greedy = complete(tree, matrix)
        pruned = prune_transfers(greedy, matrix)
        optimum: Optional[int]
        try:
            optimum = min_completion_exhaustive(tree, matrix, max_transfers).count
        except Exceeded:
            optimum = None
        gap = pruned.transfer_count - optimum if optimum is not None else None
        report.rows.append({
            "instance": index,
            "taxa": matrix.n_taxa,
            "characters": matrix.n_characters,
            "greedy": greedy.transfer_count,
            "greedyPruned": pruned.transfer_count,
            "optimum": optimum,
            "gap": gap,
        })
    log.info(f"Gap distribution over {len(report.rows)} instance(s): {report.histogram}")
    return report
