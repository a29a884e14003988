"""
Plain-text formats for matrices, code triples and classical schemes.

Matrix block::

    q 3 rows 2 cols 8
    1 1 1 0 | 0 0 0 0
    0 0 0 0 | 1 1 1 0

Symplectic rows may separate their halves with ``|``. Field elements are the
integer encodings 0..q−1. A triple file starts with ``params q n k s``, may
give ``advance i j ...`` and holds labelled ``C_S``, ``C_R`` and optionally
``C_MAX`` blocks; a missing ``C_MAX`` is completed from C_R. A classical
scheme file starts with ``classical q n`` followed by ``C1`` and ``C2``
blocks. Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from app.algebra.finite_field import as_ints, field_from_order
from app.algebra.linalg import Subspace, as_share_set
from app.codes.symplectic import CodeTriple, validate_triple, witt_complete
from app.core.errors import CodeFileError
from app.core.logging_config import get_logger
from app.schemes.classical import ClassicalScheme, classical_scheme

logger = get_logger(__name__)


@dataclass(frozen=True)
class TripleFile:
    triple: CodeTriple
    advance_set: tuple[int, ...]
    completed_c_max: bool


class _Lines:
    """Meaningful lines of a file with their 1-based numbers."""

    def __init__(self, text: str):
        self._items: Iterator[tuple[int, list[str]]] = (
            (number, line.split())
            for number, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.lstrip().startswith("#")
        )
        self._pending: tuple[int, list[str]] | None = None

    def peek(self) -> tuple[int, list[str]] | None:
        if self._pending is None:
            self._pending = next(self._items, None)
        return self._pending

    def next(self, expected: str) -> tuple[int, list[str]]:
        item = self.peek()
        if item is None:
            raise CodeFileError(f"unexpected end of file, expected {expected}")
        self._pending = None
        return item


def _integers(number: int, tokens: Iterable[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise CodeFileError(f"line {number}: expected integers, got {' '.join(tokens)}") from exc


def format_matrix(q: int, rows, symplectic: bool = False) -> str:
    matrix = np.atleast_2d(as_ints(rows))
    lines = [f"q {q} rows {matrix.shape[0]} cols {matrix.shape[1]}"]
    for row in matrix:
        values = [str(v) for v in row]
        if symplectic:
            half = len(values) // 2
            values = values[:half] + ["|"] + values[half:]
        lines.append(" ".join(values))
    return "\n".join(lines)


def _read_matrix(lines: _Lines, q: int | None = None) -> tuple[int, np.ndarray]:
    number, header = lines.next("a matrix header")
    if len(header) != 6 or header[0] != "q" or header[2] != "rows" or header[4] != "cols":
        raise CodeFileError(f"line {number}: expected 'q <q> rows <r> cols <c>', got {' '.join(header)}")
    order, n_rows, n_cols = _integers(number, header[1::2])
    if q is not None and order != q:
        raise CodeFileError(f"line {number}: matrix over GF({order}) in a file over GF({q})")
    rows = []
    for _ in range(n_rows):
        row_number, tokens = lines.next(f"{n_rows} matrix rows")
        values = _integers(row_number, [t for t in tokens if t != "|"])
        if len(values) != n_cols:
            raise CodeFileError(f"line {row_number}: {len(values)} entries, expected {n_cols}")
        if any(not 0 <= v < order for v in values):
            raise CodeFileError(f"line {row_number}: entries must lie in 0..{order - 1}")
        rows.append(values)
    return order, np.array(rows, dtype=np.int64).reshape(n_rows, n_cols)


def parse_matrix(text: str) -> tuple[int, np.ndarray]:
    """The field order and integer rows of a single matrix block."""
    lines = _Lines(text)
    result = _read_matrix(lines)
    if lines.peek() is not None:
        raise CodeFileError(f"line {lines.peek()[0]}: trailing content after the matrix")
    return result


def _labelled_blocks(lines: _Lines, q: int, labels: tuple[str, ...]) -> dict[str, np.ndarray]:
    blocks: dict[str, np.ndarray] = {}
    while lines.peek() is not None:
        number, tokens = lines.next("a block label")
        label = " ".join(tokens).upper()
        if label not in labels:
            raise CodeFileError(f"line {number}: unknown block {' '.join(tokens)!r}, expected one of {', '.join(labels)}")
        if label in blocks:
            raise CodeFileError(f"line {number}: block {label} given twice")
        blocks[label] = _read_matrix(lines, q)[1]
    return blocks


def triple_from_text(text: str, prefer_css: bool = True) -> TripleFile:
    """
    Parse and validate a triple file.

    Raises:
        CodeFileError: malformed text.
        TripleViolation: the blocks do not form a valid chain.
    """
    lines = _Lines(text)
    number, header = lines.next("'params q n k s'")
    if len(header) != 5 or header[0] != "params":
        raise CodeFileError(f"line {number}: expected 'params q n k s', got {' '.join(header)}")
    q, n, k, s = _integers(number, header[1:])
    field = field_from_order(q)

    advance_set: tuple[int, ...] = ()
    peeked = lines.peek()
    if peeked is not None and peeked[1][0] == "advance":
        number, tokens = lines.next("an advance line")
        advance_set = as_share_set(_integers(number, tokens[1:]))

    blocks = _labelled_blocks(lines, q, ("C_S", "C_R", "C_MAX"))
    for label in ("C_S", "C_R"):
        if label not in blocks:
            raise CodeFileError(f"missing {label} block")

    def span(label: str) -> Subspace:
        rows = blocks[label]
        if rows.shape[1] != 2 * n:
            raise CodeFileError(f"{label} has {rows.shape[1]} columns, expected 2n = {2 * n}")
        return Subspace.span(field.gf, rows, ambient_dim=2 * n, symplectic=True)

    c_s, c_r = span("C_S"), span("C_R")
    completed = "C_MAX" not in blocks
    if completed:
        logger.info("No C_MAX block; completing C_R by Witt extension")
        c_max = witt_complete(c_r, prefer_css=prefer_css)
    else:
        c_max = span("C_MAX")
    triple = validate_triple(field, c_s, c_r, c_max, n=n, k=k, s=s)
    return TripleFile(triple=triple, advance_set=advance_set, completed_c_max=completed)


def triple_to_text(triple: CodeTriple, advance_set: Iterable[int] = ()) -> str:
    field = triple.field
    parts = [f"params {triple.q} {triple.n} {triple.k} {triple.s}"]
    chosen = as_share_set(advance_set)
    if chosen:
        parts.append("advance " + " ".join(str(i) for i in chosen))
    for label, space in (("C_S", triple.c_s), ("C_R", triple.c_r), ("C_MAX", triple.c_max)):
        parts.append(label)
        parts.append(format_matrix(field.q, space.basis, symplectic=True))
    return "\n".join(parts) + "\n"


def classical_from_text(text: str) -> ClassicalScheme:
    lines = _Lines(text)
    number, header = lines.next("'classical q n'")
    if len(header) != 3 or header[0] != "classical":
        raise CodeFileError(f"line {number}: expected 'classical q n', got {' '.join(header)}")
    q, n = _integers(number, header[1:])
    field = field_from_order(q)
    blocks = _labelled_blocks(lines, q, ("C1", "C2"))
    spaces = {}
    for label in ("C1", "C2"):
        if label not in blocks:
            raise CodeFileError(f"missing {label} block")
        if blocks[label].shape[1] != n:
            raise CodeFileError(f"{label} has {blocks[label].shape[1]} columns, expected n = {n}")
        spaces[label] = Subspace.span(field.gf, blocks[label], ambient_dim=n)
    return classical_scheme(field, spaces["C1"], spaces["C2"])


def classical_to_text(scheme: ClassicalScheme) -> str:
    parts = [f"classical {scheme.q} {scheme.n}"]
    for label, space in (("C1", scheme.c1), ("C2", scheme.c2)):
        parts.append(label)
        parts.append(format_matrix(scheme.q, space.basis))
    return "\n".join(parts) + "\n"


def _read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc}") from exc


def read_triple(path: Path, prefer_css: bool = True) -> TripleFile:
    return triple_from_text(_read_text(path), prefer_css=prefer_css)


def write_triple(path: Path, triple: CodeTriple, advance_set: Iterable[int] = ()) -> None:
    Path(path).write_text(triple_to_text(triple, advance_set), encoding="utf-8")


def read_classical(path: Path) -> ClassicalScheme:
    return classical_from_text(_read_text(path))
