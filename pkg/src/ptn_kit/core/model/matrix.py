"""
Binary character matrix: which taxon possesses which character.

Usage:
    matrix = CharacterMatrix.from_sets({'X': {'a'}, 'Y': set()}, characters=['a'])
    matrix.characters_of('X')   # frozenset({'a'})
    matrix.taxa_with('a')       # frozenset({'X'})
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from oarc_log import log

from ptn_kit.utils.errors import DuplicateName, InputError, SigmaMismatch, UnknownCharacter


@dataclass(frozen=True, eq=False)
class CharacterMatrix:
    """Taxa by characters presence matrix.

    ``presence[i, j]`` is True iff taxon ``taxa[i]`` has character ``characters[j]``.
    The array is read-only once the matrix is built.
    """

    taxa: Tuple[str, ...]
    characters: Tuple[str, ...]
    presence: np.ndarray

    def __post_init__(self):
        taxa = tuple(self.taxa)
        characters = tuple(self.characters)
        _check_unique("taxon", taxa)
        _check_unique("character", characters)

        presence = np.array(self.presence, dtype=bool, copy=True)
        if presence.size == 0:
            presence = presence.reshape(len(taxa), len(characters))
        if presence.shape != (len(taxa), len(characters)):
            raise InputError(
                f"Presence matrix has shape {presence.shape}, "
                f"expected ({len(taxa)}, {len(characters)})"
            )
        presence.setflags(write=False)

        object.__setattr__(self, "taxa", taxa)
        object.__setattr__(self, "characters", characters)
        object.__setattr__(self, "presence", presence)

        self._warn_duplicate_rows()

    @classmethod
    def from_sets(cls, sets: Mapping[str, Iterable[str]],
                  characters: Optional[Sequence[str]] = None) -> "CharacterMatrix":
        """Build a matrix from taxon -> character set.

        Args:
            sets: Character set of each taxon; taxa keep the mapping's order
            characters: Column order; defaults to the sorted union of the sets

        Returns:
            The matrix

        Raises:
            UnknownCharacter: if a set names a character outside characters
        """
        taxa = list(sets.keys())
        rows = {t: frozenset(cs) for t, cs in sets.items()}
        if characters is None:
            characters = sorted(set().union(*rows.values())) if rows else []
        known = set(characters)
        for taxon, chars in rows.items():
            extra = chars - known
            if extra:
                raise UnknownCharacter(sorted(extra)[0])
        presence = np.array(
            [[c in rows[t] for c in characters] for t in taxa], dtype=bool
        ).reshape(len(taxa), len(characters))
        return cls(tuple(taxa), tuple(characters), presence)

    @property
    def n_taxa(self) -> int:
        return len(self.taxa)

    @property
    def n_characters(self) -> int:
        return len(self.characters)

    def taxon_index(self, taxon: str) -> int:
        try:
            return self.taxa.index(taxon)
        except ValueError:
            raise InputError(f"Unknown taxon {taxon!r}", taxon=taxon)

    def character_index(self, character: str) -> int:
        try:
            return self.characters.index(character)
        except ValueError:
            raise UnknownCharacter(character)

    def has(self, taxon: str, character: str) -> bool:
        return bool(self.presence[self.taxon_index(taxon), self.character_index(character)])

    def characters_of(self, taxon: str) -> FrozenSet[str]:
        """The character set S_i of one taxon."""
        row = self.presence[self.taxon_index(taxon)]
        return frozenset(c for c, present in zip(self.characters, row) if present)

    def taxa_with(self, character: str) -> FrozenSet[str]:
        column = self.presence[:, self.character_index(character)]
        return frozenset(t for t, present in zip(self.taxa, column) if present)

    def empty_characters(self) -> Tuple[str, ...]:
        """Characters no taxon possesses."""
        counts = self.presence.sum(axis=0) if self.n_taxa else np.zeros(self.n_characters)
        return tuple(c for c, n in zip(self.characters, counts) if n == 0)

    def as_sets(self) -> dict:
        return {t: self.characters_of(t) for t in self.taxa}

    def check_sigma(self, net) -> None:
        """Raise SigmaMismatch unless the network's leaves carry exactly these taxa."""
        taxa = set(net.sigma.values())
        missing = sorted(set(self.taxa) - taxa)
        extra = sorted(taxa - set(self.taxa))
        if missing or extra:
            raise SigmaMismatch(missing=missing, extra=extra)

    def to_frame(self) -> pd.DataFrame:
        """0/1 frame indexed by taxon, one column per character."""
        frame = pd.DataFrame(self.presence.astype(int), index=list(self.taxa),
                             columns=list(self.characters))
        frame.index.name = "taxon"
        return frame

    def _warn_duplicate_rows(self) -> None:
        if self.n_taxa < 2:
            return
        seen = {}
        for taxon, row in zip(self.taxa, self.presence):
            key = row.tobytes()
            if key in seen:
                log.warning(f"Taxa {seen[key]!r} and {taxon!r} have identical character sets")
            else:
                seen[key] = taxon

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterMatrix):
            return NotImplemented
        return (self.taxa == other.taxa and self.characters == other.characters
                and np.array_equal(self.presence, other.presence))

    def __hash__(self) -> int:
        return hash((self.taxa, self.characters, self.presence.tobytes()))

    def __repr__(self) -> str:
        return f"CharacterMatrix(taxa={len(self.taxa)}, characters={len(self.characters)})"


def _check_unique(kind: str, names: Sequence[str]) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateName(kind, name)
        seen.add(name)
