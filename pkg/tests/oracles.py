"""Independent reference implementations used to pin expected values.

Deliberately naive: full enumeration everywhere, no shared code with the
package's solver beyond the Graph accessors.
"""

from __future__ import annotations

from itertools import combinations, product

from sierpdom import Graph


def roman_min_enumerated(g: Graph) -> int:
    """Minimum RDF weight by trying all 3^n labelings."""
    n = g.order
    best = 2 * n
    for labels in product((0, 1, 2), repeat=n):
        w = sum(labels)
        if w >= best:
            continue
        twos = 0
        for v, x in enumerate(labels):
            if x == 2:
                twos |= 1 << v
        if all(g.adj_masks[v] & twos for v, x in enumerate(labels) if x == 0):
            best = w
    return best


def roman_min_canonical(g: Graph) -> tuple[int, ...]:
    """Canonical optimal labels: min weight, then max 2s, then lex-min 2-set."""
    n = g.order
    best_key = None
    best = None
    for labels in product((0, 1, 2), repeat=n):
        twos = 0
        for v, x in enumerate(labels):
            if x == 2:
                twos |= 1 << v
        if not all(g.adj_masks[v] & twos for v, x in enumerate(labels) if x == 0):
            continue
        two_set = tuple(v for v, x in enumerate(labels) if x == 2)
        one_set = tuple(v for v, x in enumerate(labels) if x == 1)
        key = (sum(labels), -len(two_set), two_set, one_set)
        if best_key is None or key < best_key:
            best_key, best = key, labels
    return best


def domination_min_subsets(g: Graph) -> int:
    """Minimum dominating set size by growing subset enumeration."""
    n = g.order
    full = (1 << n) - 1
    for k in range(n + 1):
        for sub in combinations(range(n), k):
            covered = 0
            for v in sub:
                covered |= g.closed_masks[v]
            if covered == full:
                return k
    raise AssertionError("unreachable")


def min_completion_weight(g: Graph) -> int:
    """min over all 2-sets S of 2|S| + |V - N[S]|, by full 2^n enumeration."""
    n = g.order
    full = (1 << n) - 1
    best = n
    for mask in range(1 << n):
        covered = 0
        m = mask
        while m:
            low = m & -m
            covered |= g.closed_masks[low.bit_length() - 1]
            m ^= low
        best = min(best, 2 * mask.bit_count() + (full & ~covered).bit_count())
    return best


def shortest_path_by_enumeration(g: Graph, u: int, v: int):
    """Distance via DFS over all simple paths; None when unreachable."""
    if u == v:
        return 0
    best = None

    def walk(x, seen, steps):
        nonlocal best
        if best is not None and steps >= best:
            return
        for y in g.neighbors(x):
            if y == v:
                if best is None or steps + 1 < best:
                    best = steps + 1
            elif y not in seen:
                walk(y, seen | {y}, steps + 1)

    walk(u, {u}, 0)
    return best


def is_rdf_by_definition(g: Graph, labels) -> bool:
    for v, x in enumerate(labels):
        if x == 0 and not any(labels[u] == 2 for u in g.neighbors(v)):
            return False
    return True
