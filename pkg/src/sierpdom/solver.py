"""Exact domination and Roman domination via branch and bound.

Roman domination reduces to a search over the set S of 2-labeled
vertices: once S is fixed, the cheapest completion labels exactly the
vertices outside N[S] with 1, for a total weight of 2|S| + |V - N[S]|.
The search branches on an undominated vertex v of maximum degree, with
one child per candidate 2-vertex in N[v] (later siblings exclude earlier
choices) plus a final child that settles v with label 1 and bars N[v]
from ever entering S.  The lower bound at a node adds the best k of
"2 per chosen vertex, covering at most its closed neighborhood" against
the 1-per-vertex fallback.

Witnesses are canonicalized in a second phase: among minimum-weight
labelings, maximize the number of 2s (equivalently minimize the number
of 1s), then take the lexicographically smallest 2-set.  Searches are
sequential and deterministic.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional, Union

from .errors import BudgetError, SolveTimeout
from .graphs import Graph, is_dominating_set
from .roman import RomanFunction, is_roman_dominating
from .sierpinski import DEFAULT_VERTEX_BUDGET

_CLOCK_STRIDE = 1024


@dataclass(frozen=True)
class Certificate:
    """An exact value plus the witness and search statistics behind it."""

    kind: str  # "domination" or "roman"
    value: int
    witness: Union[frozenset[int], RomanFunction]
    nodes: int
    elapsed: float

    def to_json(self, graph: Optional[Graph] = None, include_timing: bool = False) -> str:
        doc: dict = {"kind": self.kind, "value": self.value, "nodes": self.nodes}
        if self.kind == "domination":
            doc["witness"] = sorted(self.witness)
        else:
            doc["witness"] = list(self.witness.labels)
        if graph is not None:
            doc["graph"] = {"name": graph.name, "sha256": graph.digest()}
        if include_timing:
            doc["elapsed_s"] = round(self.elapsed, 3)
        return json.dumps(doc, sort_keys=True)


class _Deadline:
    __slots__ = ("at", "ticks")

    def __init__(self, time_limit: Optional[float]):
        self.at = None if time_limit is None else time.perf_counter() + time_limit
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.at is not None and self.ticks % _CLOCK_STRIDE == 0:
            if time.perf_counter() > self.at:
                raise SolveTimeout("exact solve exceeded its time limit")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_cover(closed: tuple[int, ...], full: int, n: int) -> list[int]:
    """Deterministic greedy dominating set, used as the initial incumbent."""
    dominated = 0
    chosen = []
    while dominated != full:
        best_u, best_c = -1, -1
        for u in range(n):
            c = (closed[u] & ~dominated).bit_count()
            if c > best_c:
                best_u, best_c = u, c
        chosen.append(best_u)
        dominated |= closed[best_u]
    return chosen


def _check_order(g: Graph) -> None:
    if g.order > DEFAULT_VERTEX_BUDGET:
        raise BudgetError(f"graph order {g.order} exceeds the solve budget")


def gamma_exact(g: Graph, time_limit: Optional[float] = None) -> Certificate:
    """Exact domination number with a minimum dominating set witness."""
    _check_order(g)
    start = time.perf_counter()
    n = g.order
    closed = g.closed_masks
    full = (1 << n) - 1
    deadline = _Deadline(time_limit)
    deg = [g.degree(v) for v in range(n)]

    greedy = _greedy_cover(closed, full, n)
    best_size = len(greedy)
    best_mask = 0
    for u in greedy:
        best_mask |= 1 << u
    nodes = 0

    def min_picks(ucount: int, covs: list[int]) -> Optional[int]:
        covs.sort(reverse=True)
        acc = 0
        for k, c in enumerate(covs, start=1):
            acc += c
            if acc >= ucount:
                return k
        return None

    def rec(dominated: int, chosen: int, size: int, excluded: int):
        nonlocal best_size, best_mask, nodes
        nodes += 1
        deadline.tick()
        undom = full & ~dominated
        if not undom:
            if size < best_size:
                best_size, best_mask = size, chosen
            return
        ucount = undom.bit_count()
        covs = [
            (closed[u] & undom).bit_count()
            for u in range(n)
            if not excluded >> u & 1 and closed[u] & undom
        ]
        need = min_picks(ucount, covs)
        if need is None or size + need >= best_size:
            return
        v, vd = -1, -1
        for i in _bits(undom):
            if deg[i] > vd:
                v, vd = i, deg[i]
        cands = sorted(
            _bits(closed[v] & ~excluded),
            key=lambda u: (-(closed[u] & undom).bit_count(), u),
        )
        ex = excluded
        for u in cands:
            rec(dominated | closed[u], chosen | (1 << u), size + 1, ex)
            ex |= 1 << u

    rec(0, 0, 0, 0)
    witness = frozenset(_bits(best_mask))
    assert is_dominating_set(g, witness) and len(witness) == best_size
    return Certificate("domination", best_size, witness, nodes, time.perf_counter() - start)


def _roman_value(g: Graph, deadline: _Deadline) -> tuple[int, int]:
    """Phase 1: the optimal weight, by branch and bound over 2-sets."""
    n = g.order
    closed = g.closed_masks
    full = (1 << n) - 1
    deg = [g.degree(v) for v in range(n)]
    best = min(2 * len(_greedy_cover(closed, full, n)), n)
    nodes = 0

    def lower(undom: int, excluded: int) -> int:
        ucount = undom.bit_count()
        covs = sorted(
            (
                (closed[u] & undom).bit_count()
                for u in range(n)
                if not excluded >> u & 1 and closed[u] & undom
            ),
            reverse=True,
        )
        bound = ucount  # take label 1 everywhere
        acc = 0
        for k, c in enumerate(covs, start=1):
            acc += c
            val = 2 * k + (ucount - acc if acc < ucount else 0)
            if val < bound:
                bound = val
            if acc >= ucount or 2 * k >= bound:
                break
        return bound

    def rec(dominated: int, settled_ones: int, weight: int, excluded: int):
        nonlocal best, nodes
        nodes += 1
        deadline.tick()
        undom = full & ~(dominated | settled_ones)
        if not undom:
            if weight < best:
                best = weight
            return
        if weight + lower(undom, excluded) >= best:
            return
        v, vd = -1, -1
        for i in _bits(undom):
            if deg[i] > vd:
                v, vd = i, deg[i]
        cands = sorted(
            _bits(closed[v] & ~excluded),
            key=lambda u: (-(closed[u] & undom).bit_count(), u),
        )
        ex = excluded
        for u in cands:
            rec(dominated | closed[u], settled_ones, weight + 2, ex)
            ex |= 1 << u
        # settle v with label 1; a cheapest completion never puts a 2 next to it
        rec(dominated, settled_ones | (1 << v), weight + 1, excluded | closed[v])

    rec(0, 0, 0, 0)
    return best, nodes


def _lex_min_two_set(
    g: Graph, k: int, target_cover: int, deadline: _Deadline
) -> tuple[Optional[list[int]], int]:
    """Lexicographically smallest k-subset covering at least target_cover."""
    n = g.order
    closed = g.closed_masks
    nodes = 0

    def rec(i: int, left: int, covered: int) -> Optional[list[int]]:
        nonlocal nodes
        nodes += 1
        deadline.tick()
        if left == 0:
            return [] if covered.bit_count() >= target_cover else None
        if n - i < left:
            return None
        gains = sorted(
            ((closed[u] & ~covered).bit_count() for u in range(i, n)), reverse=True
        )
        if covered.bit_count() + sum(gains[:left]) < target_cover:
            return None
        take = rec(i + 1, left - 1, covered | closed[i])
        if take is not None:
            return [i] + take
        return rec(i + 1, left, covered)

    return rec(0, k, 0), nodes


def gamma_r_exact(g: Graph, time_limit: Optional[float] = None) -> Certificate:
    """Exact Roman domination number with a canonical witness.

    The witness has minimum weight, then as many 2s as possible, then the
    lexicographically smallest 2-set; its 1s are exactly the vertices not
    covered by the 2s.
    """
    _check_order(g)
    start = time.perf_counter()
    deadline = _Deadline(time_limit)
    n = g.order
    value, nodes = _roman_value(g, deadline)
    twos: Optional[list[int]] = None
    for k in range(value // 2, -1, -1):
        if value - 2 * k > n:
            break
        twos, extra = _lex_min_two_set(g, k, n - (value - 2 * k), deadline)
        nodes += extra
        if twos is not None:
            break
    assert twos is not None, "no witness at the proven optimum"
    covered = 0
    for u in twos:
        covered |= g.closed_masks[u]
    labels = [0] * n
    for v in range(n):
        if not covered >> v & 1:
            labels[v] = 1
    for u in twos:
        labels[u] = 2
    f = RomanFunction(tuple(labels))
    assert is_roman_dominating(f, g) and f.weight == value
    return Certificate("roman", value, f, nodes, time.perf_counter() - start)


def brute_force_gamma_r(g: Graph) -> Certificate:
    """Exhaustive check of every 2-set; same contract as gamma_r_exact.

    Kept simple on purpose as an independent reference; refuses orders
    above 22.
    """
    if g.order > 22:
        raise BudgetError(f"brute force capped at order 22, got {g.order}")
    start = time.perf_counter()
    n = g.order
    closed = g.closed_masks
    full = (1 << n) - 1
    size = 1 << n
    cover = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        cover[mask] = cover[mask ^ low] | closed[low.bit_length() - 1]
    best_key = None
    best_mask = 0
    for mask in range(size):
        w = 2 * mask.bit_count() + (full & ~cover[mask]).bit_count()
        key = (w, -mask.bit_count())
        if best_key is None or key < best_key:
            best_key, best_mask = key, mask
        elif key == best_key and sorted(_bits(mask)) < sorted(_bits(best_mask)):
            best_mask = mask
    labels = [0] * n
    for v in range(n):
        if not cover[best_mask] >> v & 1:
            labels[v] = 1
    for u in _bits(best_mask):
        labels[u] = 2
    f = RomanFunction(tuple(labels))
    return Certificate("roman", best_key[0], f, size, time.perf_counter() - start)


def is_roman_graph(g: Graph, time_limit: Optional[float] = None) -> tuple[bool, Optional[RomanFunction]]:
    """Whether the Roman domination number is twice the domination number.

    When it is, returns a witness putting 2 on a minimum dominating set
    and 1 nowhere.
    """
    dom = gamma_exact(g, time_limit)
    rom = gamma_r_exact(g, time_limit)
    if rom.value != 2 * dom.value:
        return False, None
    return True, RomanFunction.from_sets(g.order, twos=dom.witness)
