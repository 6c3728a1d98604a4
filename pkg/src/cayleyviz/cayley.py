"""Cayley-table text format for labeled digraphs.

A labeled digraph (equivalently, the transition graph of a DFA) is stored
as a whitespace-delimited token stream::

    <num_labels> <num_vertices>
    <cell> <cell> ... one row per vertex, one cell per label

Each cell is either a non-negative integer (the successor vertex) or the
literal ``;`` for an empty cell.  Any mix of spaces, tabs and newlines
separates tokens, so the one-line and tabular presentations of the same
table are interchangeable.  Vertices are the integers ``0..num_vertices-1``
and labels are positional (rendered ``a``, ``b``, ... in diagnostics).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    BadHeader,
    MalformedToken,
    TooFewTokens,
    TrailingGarbage,
    VertexOutOfRange,
)

FILE_EXTENSION = ".cay"


def label_name(index: int) -> str:
    """Positional label name: a..z for the first 26 labels, then L26, L27, ..."""
    if 0 <= index < 26:
        return chr(ord("a") + index)
    return f"L{index}"


@dataclass(frozen=True)
class LabeledDigraph:
    """A vertices-by-labels successor table.

    ``table[i][j]`` is the successor of vertex ``i`` under label ``j``, or
    ``None`` for an empty cell.  Determinism is structural: one cell per
    (vertex, label) pair.  An entry ``>= num_vertices`` is a *dangling*
    reference (only produced by lenient parsing of erratic files); it is kept
    in the table and survives serialization but contributes no edge.
    """

    num_labels: int
    num_vertices: int
    table: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self) -> None:
        if self.num_labels < 1:
            raise ValueError("num_labels must be >= 1")
        if self.num_vertices < 1:
            raise ValueError("num_vertices must be >= 1")
        if len(self.table) != self.num_vertices:
            raise ValueError("table must have one row per vertex")
        for row in self.table:
            if len(row) != self.num_labels:
                raise ValueError("each row must have one cell per label")
            for cell in row:
                if cell is not None and cell < 0:
                    raise ValueError("cells must be None or non-negative")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Optional[int]]], num_labels: Optional[int] = None
    ) -> "LabeledDigraph":
        """Build a graph from row sequences, inferring sizes."""
        if num_labels is None:
            num_labels = len(rows[0])
        table = tuple(tuple(row) for row in rows)
        return cls(num_labels, len(table), table)

    def successor(self, vertex: int, label: int) -> Optional[int]:
        """Live successor of ``vertex`` under ``label``; None if the cell is
        empty or dangling."""
        cell = self.table[vertex][label]
        if cell is None or cell >= self.num_vertices:
            return None
        return cell

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield live edges as (source, label, target), row-major."""
        for u, row in enumerate(self.table):
            for j, cell in enumerate(row):
                if cell is not None and cell < self.num_vertices:
                    yield u, j, cell

    def out_targets(self, vertex: int) -> tuple[int, ...]:
        """Live successors of ``vertex`` in label order (duplicates kept)."""
        return tuple(
            cell
            for cell in self.table[vertex]
            if cell is not None and cell < self.num_vertices
        )

    @property
    def num_edges(self) -> int:
        return sum(1 for _ in self.edges())

    @property
    def dangling_cells(self) -> int:
        """Number of cells referencing vertices outside the declared range."""
        return sum(
            1
            for row in self.table
            for cell in row
            if cell is not None and cell >= self.num_vertices
        )


def _read_header_token(tokens: list[str], position: int, what: str) -> int:
    if position >= len(tokens):
        raise BadHeader(f"missing header token for {what}")
    token = tokens[position]
    try:
        value = int(token)
    except ValueError:
        raise BadHeader(f"{what} must be an integer, got {token!r}") from None
    if value <= 0:
        raise BadHeader(f"{what} must be positive, got {value}")
    return value


def parse(text: str, *, allow_dangling: bool = False) -> LabeledDigraph:
    """Parse Cayley-table text into a :class:`LabeledDigraph`.

    The first two tokens are the label-alphabet size and the vertex count,
    followed by ``num_vertices * num_labels`` cells in row-major order.
    Tokens after the table are rejected (:class:`TrailingGarbage`), as are
    cells outside ``0..num_vertices-1`` (:class:`VertexOutOfRange`) unless
    ``allow_dangling`` is set, in which case out-of-range successors are kept
    as dangling references that contribute no edge.
    """
    tokens = text.split()
    num_labels = _read_header_token(tokens, 0, "label count")
    num_vertices = _read_header_token(tokens, 1, "vertex count")

    expected = num_vertices * num_labels
    cells = tokens[2:]
    if len(cells) < expected:
        raise TooFewTokens(
            f"expected {expected} cells for {num_vertices} vertices x "
            f"{num_labels} labels, got {len(cells)}"
        )
    if len(cells) > expected:
        raise TrailingGarbage(
            f"{len(cells) - expected} extra token(s) after the table, "
            f"starting with {cells[expected]!r}"
        )

    rows = []
    for i in range(num_vertices):
        row: list[Optional[int]] = []
        for j in range(num_labels):
            token = cells[i * num_labels + j]
            if token == ";":
                row.append(None)
                continue
            try:
                value = int(token)
            except ValueError:
                raise MalformedToken(
                    f"cell ({i}, {label_name(j)}): {token!r} is neither an "
                    "integer nor ';'"
                ) from None
            if value < 0 or (value >= num_vertices and not allow_dangling):
                raise VertexOutOfRange(
                    f"cell ({i}, {label_name(j)}): vertex {value} outside "
                    f"0..{num_vertices - 1}"
                )
            row.append(value)
        rows.append(tuple(row))

    return LabeledDigraph(num_labels, num_vertices, tuple(rows))


def serialize(g: LabeledDigraph) -> str:
    """Canonical text form: header line, then one row per line.

    Cells are single-space separated with ``;`` for empty cells; the output
    re-parses to an equal graph.
    """
    lines = [f"{g.num_labels} {g.num_vertices}"]
    for row in g.table:
        lines.append(" ".join(";" if cell is None else str(cell) for cell in row))
    return "\n".join(lines) + "\n"
