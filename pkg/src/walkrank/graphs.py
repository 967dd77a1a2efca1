"""Tree families with the fixed vertex labelings the quotient construction relies on."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .intmatrix import IntMatrix

Edge = tuple[int, int]


def _normalize_edges(order: int, edges: Iterable[Edge]) -> frozenset[Edge]:
    out: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= u <= order and 1 <= v <= order):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{order}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices labeled 1..order.

    Edges are kept as (u, v) pairs with u < v; duplicates collapse and
    self-loops are rejected at construction time.
    """

    order: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"graph order must be >= 1, got {self.order}")
        object.__setattr__(self, "edges", _normalize_edges(self.order, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbor_sets(self) -> dict[int, set[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.order + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def degree_sequence(self) -> tuple[int, ...]:
        """Vertex degrees in label order 1..order."""
        degs = [0] * (self.order + 1)
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs[1:])

    def delete_vertex(self, v: int) -> "Graph":
        """Graph on 1..order-1; only valid for deleting the last label."""
        if v != self.order:
            raise ValueError("only the highest-labeled vertex can be deleted")
        kept = [(a, b) for a, b in self.edges if v not in (a, b)]
        return Graph(self.order - 1, frozenset(kept))


def from_edge_list(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph from explicit pairs; duplicates collapse, self-loops are rejected."""
    return Graph(order, frozenset((u, v) for u, v in edges))


def make_path(n: int) -> Graph:
    """Path 1-2-...-n."""
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def make_dynkin(n: int) -> Graph:
    """Tree on n vertices: the path 2-3-...-n plus the pendant edge {1, 3}.

    Vertices 1 and 2 are the two leaves attached to vertex 3; vertex 3 is the
    unique vertex of degree 3.
    """
    if n < 4:
        raise ValueError(f"order must be >= 4 for this family, got {n}")
    edges = {(1, 3)} | {(i, i + 1) for i in range(2, n)}
    return Graph(n, frozenset(edges))


def make_extended_dynkin(n: int) -> Graph:
    """Tree on n+1 vertices with leaf pairs {1, 2} at vertex 3 and {n, n+1} at vertex n-1.

    The spine is 3-4-...-(n-1); for n = 4 the spine is the single vertex 3 and
    the result is the star on five vertices.
    """
    if n < 4:
        raise ValueError(f"order must be >= 4 for this family, got {n}")
    edges = {(1, 3), (2, 3), (n - 1, n), (n - 1, n + 1)}
    edges |= {(i, i + 1) for i in range(3, n - 1)}
    return Graph(n + 1, frozenset(edges))


def adjacency_matrix(g: Graph) -> IntMatrix:
    """Symmetric 0/1 matrix; entry (i, j) is 1 exactly when {i, j} is an edge."""
    rows = [[0] * g.order for _ in range(g.order)]
    for u, v in g.edges:
        rows[u - 1][v - 1] = 1
        rows[v - 1][u - 1] = 1
    return IntMatrix.from_rows(rows)


def format_edge_list(g: Graph) -> str:
    """Edge-list text: header `order m`, then one `u v` line per edge."""
    lines = [f"{g.order} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Inverse of format_edge_list; lines starting with `#` are comments."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"edge-list header must be 'order m', got {lines[0]!r}")
    order, m = int(head[0]), int(head[1])
    if len(lines) != m + 1:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(toks[0]), int(toks[1])))
    return from_edge_list(order, edges)
