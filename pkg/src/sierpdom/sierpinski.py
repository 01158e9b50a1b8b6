"""Generalized Sierpinski graphs S(G, t).

Vertices are the words of length t over the base vertex set, numbered by
their value as base-n numerals, so id 0 is the word 00..0 and ids run in
lexicographic word order.  Two words are adjacent exactly when they have
the shapes w a b b..b and w b a a..a for some base edge {a, b}: the edge
sits at level r when the differing suffix has length r.  S(G, 1) is G
itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BudgetError
from .graphs import Graph

DEFAULT_VERTEX_BUDGET = 200_000

Word = tuple[int, ...]


@dataclass(frozen=True)
class SierpinskiGraph:
    """A built S(G, t) together with its base graph and word coding."""

    base: Graph
    depth: int
    graph: Graph

    @property
    def order(self) -> int:
        return self.graph.order

    def word_of(self, vid: int) -> Word:
        """Digits of vid base n, most significant first, padded to depth."""
        n = self.base.order
        out = []
        for _ in range(self.depth):
            vid, d = divmod(vid, n)
            out.append(d)
        return tuple(reversed(out))

    def id_of(self, word: Word) -> int:
        n = self.base.order
        if len(word) != self.depth:
            raise ValueError(f"word {word} does not have length {self.depth}")
        vid = 0
        for d in word:
            if not 0 <= d < n:
                raise ValueError(f"letter {d} not a base vertex")
            vid = vid * n + d
        return vid

    def words(self) -> Iterator[Word]:
        for vid in range(self.order):
            yield self.word_of(vid)

    def word_label(self, vid: int) -> str:
        return _word_str(self.word_of(vid), self.base.order)


def _word_str(word: Word, n: int) -> str:
    if n <= 10:
        return "".join(str(d) for d in word)
    return "-".join(str(d) for d in word)


def build(base: Graph, depth: int, max_vertices: Optional[int] = None) -> SierpinskiGraph:
    """Construct S(base, depth).

    Raises ValueError for depth < 1 and BudgetError when the vertex count
    n**depth would exceed the budget (DEFAULT_VERTEX_BUDGET unless given).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    n = base.order
    if n < 2:
        raise ValueError("base graph needs at least 2 vertices")
    total = n**depth
    budget = DEFAULT_VERTEX_BUDGET if max_vertices is None else max_vertices
    if total > budget:
        raise BudgetError(
            f"S({base.name or 'G'},{depth}) has {total} vertices, over the budget of {budget}"
        )
    edges = []
    for r in range(1, depth + 1):
        rep = n ** (r - 1)
        # a digit d repeated r-1 times has numeric value d * run
        run = (rep - 1) // (n - 1)
        for w in range(n ** (depth - r)):
            head = w * n
            for a, b in base.edges:
                edges.append(((head + a) * rep + b * run, (head + b) * rep + a * run))
    labels = [_word_str(_digits(v, n, depth), n) for v in range(total)]
    name = f"S({base.name or 'G'},{depth})"
    g = Graph(total, edges, name=name, labels=labels)
    expect = base.size * (total - 1) // (n - 1)
    if g.size != expect:
        raise AssertionError(f"edge generation produced {g.size} edges, expected {expect}")
    return SierpinskiGraph(base, depth, g)


def _digits(vid: int, n: int, depth: int) -> Word:
    out = []
    for _ in range(depth):
        vid, d = divmod(vid, n)
        out.append(d)
    return tuple(reversed(out))


def extreme_vertices(s: SierpinskiGraph) -> tuple[int, ...]:
    """Ids of the n constant words xx..x; their degree equals deg(x) in the base."""
    n = s.base.order
    run = (n**s.depth - 1) // (n - 1)
    return tuple(x * run for x in range(n))


def copy_vertices(s: SierpinskiGraph, prefix: Word) -> tuple[int, ...]:
    """Vertices of the base-graph copy under a prefix of length depth-1.

    The ids form a contiguous block, and the induced subgraph is checked
    to match the base graph edge for edge under x -> prefix + (x,).
    """
    if s.depth < 2:
        raise ValueError("copies need depth at least 2")
    if len(prefix) != s.depth - 1:
        raise ValueError(f"prefix must have length {s.depth - 1}")
    n = s.base.order
    pid = 0
    for d in prefix:
        if not 0 <= d < n:
            raise ValueError(f"letter {d} not a base vertex")
        pid = pid * n + d
    block = tuple(range(pid * n, pid * n + n))
    inner = sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if s.graph.adjacent(block[i], block[j])
    )
    ok = inner == s.base.size and all(
        s.graph.adjacent(block[a], block[b]) for a, b in s.base.edges
    )
    if not ok:
        raise AssertionError(f"copy at prefix {prefix} is not a faithful base copy")
    return block


def prefix_vertices(s: SierpinskiGraph, prefix: Word) -> tuple[int, ...]:
    """All vertices whose word starts with the given (possibly short) prefix."""
    if not 0 < len(prefix) <= s.depth:
        raise ValueError("prefix length must be between 1 and depth")
    n = s.base.order
    pid = 0
    for d in prefix:
        if not 0 <= d < n:
            raise ValueError(f"letter {d} not a base vertex")
        pid = pid * n + d
    span = n ** (s.depth - len(prefix))
    return tuple(range(pid * span, (pid + 1) * span))


def copy_extreme_vertex(s: SierpinskiGraph, prefix: Word) -> int:
    """The one vertex of the copy whose word ends in a constant run.

    Appending the prefix's last letter is the unique way to extend the
    run, so the copy's own extreme vertex is prefix + (prefix[-1],).
    """
    block = copy_vertices(s, prefix)
    return block[prefix[-1]]


def check_boundary_adjacency(s: SierpinskiGraph) -> bool:
    """Every edge leaving a copy touches it at or next to the copy extreme.

    For each edge {u, v} whose endpoints lie in different depth-(t-1)
    copies, the endpoint inside a copy must be that copy's extreme vertex
    or one of the extreme vertex's neighbors inside the copy.
    """
    if s.depth < 2:
        return True
    n = s.base.order
    g = s.graph
    for u, v in g.edges:
        if u // n == v // n:
            continue
        for x in (u, v):
            ext = (x // n) * n + (x // n) % n
            if x != ext and not g.adjacent(x, ext):
                return False
    return True
