"""Plain-text formats for codes and generator matrices.

Code files list one codeword per line as a '0'/'1' string; all lines must
have the same length. Blank lines and lines starting with '#' are ignored.
If the first significant line is the word `matrix`, the remaining rows are
generator-matrix rows and the code is their row span (all XOR combinations
of rows). Position 0 of a codeword is the leftmost character of its line;
the convention is fixed once here and shared by every textual surface.
"""

from __future__ import annotations

import os
from typing import Iterable

from .core import BinaryCode


def parse_code(text: str) -> BinaryCode:
    """Parse the code or matrix text format; errors carry the line number."""
    rows: list[int] = []
    length: int | None = None
    matrix_mode = False
    first_significant = True
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if first_significant and line == "matrix":
            matrix_mode = True
            first_significant = False
            continue
        first_significant = False
        if set(line) - {"0", "1"}:
            raise ValueError(f"line {number}: not a bitstring: {line!r}")
        if length is None:
            length = len(line)
        elif len(line) != length:
            raise ValueError(
                f"line {number}: length {len(line)} differs from earlier length {length}"
            )
        rows.append(int(line, 2))
    if length is None:
        raise ValueError("no codewords found")
    if matrix_mode:
        return span_from_rows(length, rows)
    return BinaryCode.from_ints(length, rows)


def span_from_rows(length: int, rows: Iterable[int]) -> BinaryCode:
    """Code spanned by the given generator rows: all XOR combinations."""
    span = {0}
    for row in rows:
        span |= {bits ^ row for bits in span}
    return BinaryCode.from_ints(length, span)


def format_code(code: BinaryCode) -> str:
    return "\n".join(str(word) for word in code.words) + "\n"


def load_code(path: str | os.PathLike[str]) -> BinaryCode:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_code(handle.read())


def save_code(code: BinaryCode, path: str | os.PathLike[str]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_code(code))
