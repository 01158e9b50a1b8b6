"""Immutable simple graphs on vertices 0..n-1.

Adjacency is stored twice: as sorted neighbor tuples for iteration and
as per-vertex int bitmasks for the solver and the domination predicates.
Edges are deduplicated and canonicalized to (min, max) pairs, so two
graphs compare equal exactly when they have the same order and edge set.
"""

from __future__ import annotations

import hashlib
from collections import deque
from typing import Iterable, Optional, Sequence


class Graph:
    """Finite undirected simple graph with optional display labels."""

    __slots__ = ("_n", "_edges", "_adj", "_adj_mask", "_closed_mask", "name", "_labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        name: str = "",
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 1:
            raise ValueError("graph order must be at least 1")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            canon.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges = tuple(sorted(canon))
        adj = [[] for _ in range(n)]
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        masks = []
        for v in range(n):
            m = 0
            for u in self._adj[v]:
                m |= 1 << u
            masks.append(m)
        self._adj_mask = tuple(masks)
        self._closed_mask = tuple(m | (1 << v) for v, m in enumerate(masks))
        self.name = name
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
        self._labels = labels

    @property
    def order(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def adj_masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks."""
        return self._adj_mask

    @property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods (vertex included) as bitmasks."""
        return self._closed_mask

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighborhood(self, v: int, closed: bool = False) -> frozenset[int]:
        if closed:
            return frozenset(self._adj[v] + (v,))
        return frozenset(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj_mask[u] >> v & 1)

    def distance(self, u: int, v: int) -> Optional[int]:
        """BFS distance between u and v, or None when unreachable."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = deque(((u, 0),))
        while frontier:
            x, d = frontier.popleft()
            for y in self._adj[x]:
                if y == v:
                    return d + 1
                if not seen >> y & 1:
                    seen |= 1 << y
                    frontier.append((y, d + 1))
        return None

    def label(self, v: int) -> str:
        if self._labels is not None:
            return self._labels[v]
        return str(v)

    @property
    def labels(self) -> Optional[tuple[str, ...]]:
        return self._labels

    def digest(self) -> str:
        """Short content hash of the canonical edge list."""
        return hashlib.sha256(format_edge_list(self).encode()).hexdigest()[:12]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self._n} m={self.size}>"


def is_connected(g: Graph) -> bool:
    seen = 1 << 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if not seen >> y & 1:
                seen |= 1 << y
                stack.append(y)
    return seen == (1 << g.order) - 1


def is_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True when every vertex lies in a closed neighborhood of the set."""
    covered = 0
    for v in vertices:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} not in graph of order {g.order}")
        covered |= g.closed_masks[v]
    return covered == (1 << g.order) - 1


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    """True when h has the same vertex set and only edges of g."""
    if h.order != g.order:
        return False
    return set(h.edges) <= set(g.edges)


def universal_vertices(g: Graph) -> frozenset[int]:
    """Vertices adjacent to every other vertex."""
    return frozenset(v for v in g.vertices if g.degree(v) == g.order - 1)


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse the plain text format: a header line "n m" and m lines "u v"."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a header line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError:
        raise ValueError("edge list header must hold two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges but {len(body)} lines follow")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    return Graph(n, edges, name=name)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, graph_name: str = "G", colors: Optional[dict[int, str]] = None) -> str:
    """Render as Graphviz DOT, one node per vertex with its display label."""
    out = [f"graph {graph_name} {{"]
    for v in g.vertices:
        attrs = [f'label="{g.label(v)}"']
        if colors and v in colors:
            attrs.append("style=filled")
            attrs.append(f'fillcolor="{colors[v]}"')
        out.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
