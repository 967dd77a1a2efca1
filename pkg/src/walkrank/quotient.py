"""Equitable partitions, their characteristic and divisor matrices, and the
trimmed walk matrix they predict."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .intmatrix import IntMatrix


class NotEquitableError(ValueError):
    """A divisor matrix was requested for a partition that is not equitable."""

    def __init__(self, cell_a: int, cell_b: int):
        self.cell_a = cell_a
        self.cell_b = cell_b
        super().__init__(
            f"partition is not equitable: vertices of cell {cell_a} have differing "
            f"neighbor counts in cell {cell_b}"
        )


@dataclass(frozen=True)
class EquitablePartition:
    """Ordered, disjoint, nonempty cells of vertex labels.

    Cell order matters: it fixes the row/column layout of the divisor matrix.
    Equitability itself is verified by the operations that need it, not
    assumed at construction.
    """

    cells: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        cells = tuple(frozenset(int(v) for v in c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise ValueError("partition needs at least one cell")
        seen: set[int] = set()
        for idx, cell in enumerate(cells, start=1):
            if not cell:
                raise ValueError(f"cell {idx} is empty")
            if seen & cell:
                raise ValueError(f"cell {idx} overlaps an earlier cell")
            seen |= cell

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    @property
    def vertex_set(self) -> frozenset[int]:
        out: set[int] = set()
        for c in self.cells:
            out |= c
        return frozenset(out)


def canonical_partition(n: int) -> EquitablePartition:
    """Cells {1,2}, {3}, ..., {n-1}, {n, n+1}: leaf pairs merged, spine singletons."""
    if n < 4:
        raise ValueError(f"order must be >= 4, got {n}")
    cells = [frozenset({1, 2})]
    cells.extend(frozenset({v}) for v in range(3, n))
    cells.append(frozenset({n, n + 1}))
    return EquitablePartition(tuple(cells))


def _check_cover(g: Graph, p: EquitablePartition) -> None:
    if p.vertex_set != frozenset(range(1, g.order + 1)):
        raise ValueError("partition does not cover the graph's vertex set exactly")


def _equitability_witness(g: Graph, p: EquitablePartition) -> tuple[int, int] | None:
    """First cell pair (1-indexed) with inconsistent neighbor counts, or None."""
    nbrs = g.neighbor_sets()
    for i, cell in enumerate(p.cells):
        for j, other in enumerate(p.cells):
            counts = {len(nbrs[v] & other) for v in cell}
            if len(counts) > 1:
                return (i + 1, j + 1)
    return None


def is_equitable(g: Graph, p: EquitablePartition) -> bool:
    """Whether every vertex of each cell sees the same number of neighbors in
    every cell."""
    _check_cover(g, p)
    return _equitability_witness(g, p) is None


def characteristic_matrix(p: EquitablePartition, order: int) -> IntMatrix:
    """0/1 vertex-by-cell incidence matrix; each row carries exactly one 1."""
    if p.vertex_set != frozenset(range(1, order + 1)):
        raise ValueError(f"partition does not cover 1..{order} exactly")
    rows = [[0] * p.cell_count for _ in range(order)]
    for c, cell in enumerate(p.cells):
        for v in cell:
            rows[v - 1][c] = 1
    return IntMatrix.from_rows(rows)


def divisor_matrix(g: Graph, p: EquitablePartition) -> IntMatrix:
    """Cell-by-cell neighbor counts.

    Entry (i, j) is the number of neighbors any vertex of cell i has in cell j;
    equitability is re-verified here because a wrong quotient would silently
    corrupt everything downstream.
    """
    _check_cover(g, p)
    witness = _equitability_witness(g, p)
    if witness is not None:
        raise NotEquitableError(*witness)
    nbrs = g.neighbor_sets()
    rows = []
    for cell in p.cells:
        v = next(iter(cell))
        rows.append([len(nbrs[v] & other) for other in p.cells])
    return IntMatrix.from_rows(rows)


def hat_walk_matrix(w: IntMatrix) -> IntMatrix:
    """Submatrix keeping rows 2..n and columns 1..n-1 of an (n+1)-square walk matrix."""
    if w.rows != w.cols:
        raise ValueError(f"expected a square walk matrix, got {w.rows}x{w.cols}")
    size = w.rows
    if size < 5:
        raise ValueError(f"need at least a 5x5 walk matrix, got {size}x{size}")
    rows = w.to_rows()
    return IntMatrix.from_rows([row[: size - 2] for row in rows[1 : size - 1]])
