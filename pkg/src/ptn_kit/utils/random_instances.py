"""
Seeded random trees, matrices and networks.

Every generator takes a numpy Generator so a run is reproduced by its seed:

    rng = make_rng(7)
    tree = random_tree(6, rng)
    matrix = random_matrix(sorted(tree.taxa), 3, rng)
    net = random_network(4, 2, rng)
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from oarc_log import log

from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.core.model.network import LgtNetwork, NetworkBuilder, Tree, build_tree
from ptn_kit.utils.errors import CyclicGraph

MAX_ATTEMPTS = 50


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def taxon_names(n: int) -> Tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, n + 1))


def character_names(n: int) -> Tuple[str, ...]:
    return tuple(f"c{i}" for i in range(1, n + 1))


def random_tree(n_taxa: int, rng: np.random.Generator,
                taxa: Optional[Sequence[str]] = None) -> Tree:
    """Rooted binary tree grown by attaching each taxon above a uniformly chosen node."""
    taxa = list(taxa or taxon_names(n_taxa))
    tree = build_tree([0], [], {0: taxa[0]})
    for taxon in taxa[1:]:
        nodes = tree.pre_order()
        builder = NetworkBuilder(tree)
        builder.graft(nodes[int(rng.integers(len(nodes)))], taxon)
        tree = builder.freeze(Tree)
    return tree


def random_matrix(taxa: Sequence[str], n_characters: int, rng: np.random.Generator,
                  density: float = 0.5) -> CharacterMatrix:
    presence = rng.random((len(taxa), n_characters)) < density
    return CharacterMatrix(tuple(taxa), character_names(n_characters), presence)


def random_instance(rng: np.random.Generator, max_taxa: int, max_characters: int,
                    min_taxa: int = 2) -> Tuple[Tree, CharacterMatrix]:
    """Random tree and matrix with sizes drawn uniformly.

    Args:
        rng: Source of randomness
        max_taxa: Largest taxon count drawn
        max_characters: Largest character count drawn
        min_taxa: Smallest taxon count drawn

    Returns:
        (tree, matrix) over the taxa s1, s2, ...
    """
    n_taxa = int(rng.integers(min_taxa, max_taxa + 1))
    n_characters = int(rng.integers(1, max_characters + 1))
    tree = random_tree(n_taxa, rng)
    return tree, random_matrix(taxon_names(n_taxa), n_characters, rng)


def add_random_transfer(net: LgtNetwork, rng: np.random.Generator) -> Optional[LgtNetwork]:
    """Insert one transfer between two random non-root nodes, or None if every try made a cycle."""
    candidates = sorted(v for v in net.nodes if v != net.root)
    if len(candidates) < 2:
        return None
    for _ in range(MAX_ATTEMPTS):
        w, a = rng.choice(candidates, size=2, replace=False)
        builder = NetworkBuilder(net)
        builder.insert_transfer(int(w), int(a))
        try:
            return builder.freeze()
        except CyclicGraph:
            continue
    log.debug(f"No acyclic transfer found for {net!r} after {MAX_ATTEMPTS} attempts")
    return None


def random_network(n_taxa: int, n_transfers: int, rng: np.random.Generator) -> LgtNetwork:
    """Random tree plus up to n_transfers random acyclic transfers."""
    net: LgtNetwork = random_tree(n_taxa, rng)
    for _ in range(n_transfers):
        grown = add_random_transfer(net, rng)
        if grown is None:
            break
        net = grown
    return net
