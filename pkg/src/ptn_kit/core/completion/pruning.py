"""Removal of transfers a completed network does not need."""

from dataclasses import replace
from typing import List

from oarc_log import log

from ptn_kit.core.completion.greedy import CompletionReport
from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.labeling import TimeMap
from ptn_kit.core.model.network import Edge, LgtNetwork
from ptn_kit.core.recognition.recognizer import recognize


def _removal_order(net: LgtNetwork, time_map: TimeMap) -> List[Edge]:
    """Youngest transfers first; ties by edge."""
    return sorted(net.transfer_edges, key=lambda e: (time_map[e[0]], e))


def prune_transfers(report: CompletionReport, matrix: CharacterMatrix,
                    threads: int = 1) -> CompletionReport:
    """Drop transfers one at a time while the network stays a PTN, to a fixpoint.

    Surviving nodes keep their times, so the pruned time map remains a
    witness of time consistency.

    Args:
        report: A completion whose network explains matrix
        matrix: The character matrix
        threads: Worker threads for each recognition call

    Returns:
        A copy of report with the pruned network and pruned_from set
    """
    net = report.network
    labeling = report.labeling
    changed = True
    while changed:
        changed = False
        for edge in _removal_order(net, report.time_map):
            if edge not in net.transfer_edges:
                continue
            candidate = net.with_transfer_removed(edge)
            result = recognize(candidate, matrix, threads=threads)
            if result:
                log.debug(f"Pruned transfer {edge[0]} -> {edge[1]}")
                net, labeling = candidate, result.labeling
                changed = True
            else:
                log.debug(f"Transfer {edge[0]} -> {edge[1]} is needed")

    time_map = TimeMap({v: t for v, t in report.time_map.items() if v in net.nodes})
    log.info(f"Pruning kept {len(net.transfer_edges)} of {report.transfer_count} transfer(s)")
    before = report.pruned_from if report.pruned_from is not None else report.transfer_count
    return replace(report, network=net, labeling=labeling, time_map=time_map, pruned_from=before)
