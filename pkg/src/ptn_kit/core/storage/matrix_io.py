"""
Read and write character matrices as CSV.

Format:
    taxon,a,b
    X,1,0
    Y,0,1
"""

import io
import re
from typing import List

import numpy as np
import pandas as pd

from oarc_log import log

from ptn_kit.core.model.matrix import CharacterMatrix
from ptn_kit.utils.const import MATRIX_TAXON_HEADER, NAME_PATTERN
from ptn_kit.utils.errors import EmptyMatrix, NonBinaryCell, ParseError
from ptn_kit.utils.paths import Paths, PathLike

_NAME = re.compile(rf"^{NAME_PATTERN}$")


def parse_matrix(text: str) -> CharacterMatrix:
    """Parse CSV text into a CharacterMatrix, taxa and characters in file order.

    Args:
        text: CSV with a taxon column followed by one 0/1 column per character

    Returns:
        The parsed matrix

    Raises:
        ParseError: malformed header, names or row widths (1-based line/column)
        NonBinaryCell: a cell other than 0 or 1
        DuplicateName: repeated taxon or character
        EmptyMatrix: header without rows
    """
    if not text or not text.strip():
        raise ParseError("Matrix text is empty", line=1, column=1)

    lines = text.splitlines()
    line_numbers = [i + 1 for i, line in enumerate(lines) if line.strip()]
    header_fields = lines[line_numbers[0] - 1].split(",")
    width = len(header_fields)

    # Ragged rows are reported before pandas gets to them.
    for number in line_numbers[1:]:
        fields = lines[number - 1].split(",")
        if len(fields) != width:
            raise ParseError(f"Expected {width} fields, found {len(fields)}",
                             line=number, column=min(len(fields), width) + 1)

    content = "\n".join(lines[n - 1] for n in line_numbers)
    try:
        frame = pd.read_csv(io.StringIO(content), header=None, dtype=str,
                            keep_default_na=False, skip_blank_lines=True)
    except pd.errors.ParserError as e:
        raise ParseError(f"Malformed matrix: {e}")

    header = [h.strip() for h in frame.iloc[0].tolist()]
    if header[0] != MATRIX_TAXON_HEADER:
        raise ParseError(f"First header cell must be {MATRIX_TAXON_HEADER!r}, got {header[0]!r}",
                         line=line_numbers[0], column=1)
    characters = header[1:]
    for j, name in enumerate(characters, start=2):
        if not _NAME.match(name):
            raise ParseError(f"Invalid character name {name!r}", line=line_numbers[0], column=j)

    body = frame.iloc[1:]
    if body.empty:
        raise EmptyMatrix("Matrix has no taxa")

    taxa: List[str] = []
    rows = np.zeros((len(body), len(characters)), dtype=bool)
    for i, (_, row) in enumerate(body.iterrows()):
        line = line_numbers[i + 1]
        cells = [c.strip() for c in row.tolist()]
        if not _NAME.match(cells[0]):
            raise ParseError(f"Invalid taxon name {cells[0]!r}", line=line, column=1)
        taxa.append(cells[0])
        for j, value in enumerate(cells[1:]):
            if value not in ("0", "1"):
                raise NonBinaryCell(value, line=line, column=j + 2)
            rows[i, j] = value == "1"

    matrix = CharacterMatrix(tuple(taxa), tuple(characters), rows)
    for c in matrix.empty_characters():
        log.warning(f"Character {c!r} is possessed by no taxon")
    log.debug(f"Parsed {matrix!r}")
    return matrix


def format_matrix(matrix: CharacterMatrix) -> str:
    """CSV text for a matrix; byte-stable for equal matrices."""
    return matrix.to_frame().reset_index().to_csv(index=False, lineterminator="\n")


def read_matrix(path: PathLike) -> CharacterMatrix:
    log.debug(f"Reading matrix from {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_matrix(f.read())


def write_matrix(matrix: CharacterMatrix, path: PathLike) -> None:
    Paths.ensure_parent_dir(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(format_matrix(matrix))
    log.debug(f"Wrote matrix to {path}")
