"""Roman dominating functions and the structure the product bound reads off.

A Roman dominating function (RDF) labels every vertex 0, 1 or 2 so that
each 0-vertex has a neighbor labeled 2.  Its weight is the label sum,
and the minimum weight over all RDFs is the Roman domination number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ContractError
from .graphs import Graph
from .sierpinski import SierpinskiGraph


@dataclass(frozen=True)
class RomanFunction:
    """A total labeling vertex -> {0, 1, 2}, independent of any one graph."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("labeling must cover at least one vertex")
        if any(x not in (0, 1, 2) for x in self.labels):
            raise ValueError("labels must be 0, 1 or 2")

    @classmethod
    def from_sets(cls, n: int, ones: Iterable[int] = (), twos: Iterable[int] = ()) -> "RomanFunction":
        labels = [0] * n
        for v in ones:
            labels[v] = 1
        for v in twos:
            if labels[v] == 1:
                raise ValueError(f"vertex {v} listed as both 1 and 2")
            labels[v] = 2
        return cls(tuple(labels))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def zeros(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 0)

    @property
    def ones(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 1)

    @property
    def twos(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 2)

    @property
    def weight(self) -> int:
        return sum(self.labels)

    def to_json(self, graph: Optional[Graph] = None, sierpinski: Optional[SierpinskiGraph] = None) -> str:
        doc: dict = {"weight": self.weight}
        if sierpinski is not None:
            graph = sierpinski.graph
            doc["labels_by_word"] = {
                sierpinski.word_label(v): x for v, x in enumerate(self.labels)
            }
        else:
            doc["labels"] = list(self.labels)
        if graph is not None:
            doc["graph"] = {"name": graph.name, "sha256": graph.digest()}
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str, sierpinski: Optional[SierpinskiGraph] = None) -> "RomanFunction":
        doc = json.loads(text)
        if "labels_by_word" in doc:
            if sierpinski is None:
                raise ValueError("word-keyed labeling needs the Sierpinski graph to decode")
            labels = [0] * sierpinski.order
            for key, x in doc["labels_by_word"].items():
                word = tuple(int(c) for c in (key.split("-") if "-" in key else key))
                labels[sierpinski.id_of(word)] = x
            f = cls(tuple(labels))
        else:
            f = cls(tuple(doc["labels"]))
        if doc.get("weight") not in (None, f.weight):
            raise ValueError("stored weight does not match the labels")
        return f


def is_roman_dominating(f: RomanFunction, g: Graph) -> bool:
    """Check the defining condition: every 0-vertex sees a 2."""
    if f.order != g.order:
        raise ValueError(f"labeling covers {f.order} vertices, graph has {g.order}")
    twos_mask = 0
    for v, x in enumerate(f.labels):
        if x == 2:
            twos_mask |= 1 << v
    return all(
        g.adj_masks[v] & twos_mask for v, x in enumerate(f.labels) if x == 0
    )


@dataclass(frozen=True)
class DerivedSets:
    """Structure of an RDF that the product upper-bound construction uses.

    linked_ones / linked_twos: vertices labeled 1 (resp. 2) that have a
    neighbor with the same label.
    linked_positive: positive-labeled vertices with a positive-labeled
    neighbor.
    junction_twos: 2-vertices with exactly two 0-neighbors sitting at
    distance 2 from some unlinked 1.
    remote_one_count: the number of unlinked 1-vertices at distance 2
    from some junction 2.
    """

    linked_ones: frozenset[int]
    linked_twos: frozenset[int]
    linked_positive: frozenset[int]
    remote_one_count: int
    junction_twos: frozenset[int]


def derived_sets(f: RomanFunction, g: Graph) -> DerivedSets:
    if not is_roman_dominating(f, g):
        raise ContractError("labeling is not Roman dominating on this graph")
    ones, twos, zeros = f.ones, f.twos, f.zeros

    def mask(vs):
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    ones_m, twos_m, zeros_m = mask(ones), mask(twos), mask(zeros)
    pos_m = ones_m | twos_m
    linked_ones = frozenset(v for v in ones if g.adj_masks[v] & ones_m)
    linked_twos = frozenset(v for v in twos if g.adj_masks[v] & twos_m)
    linked_positive = frozenset(
        v for v in ones | twos if g.adj_masks[v] & pos_m
    )
    lone_ones = ones - linked_ones
    candidates = [v for v in twos if (g.adj_masks[v] & zeros_m).bit_count() == 2]
    junction = set()
    remote = set()
    for v in candidates:
        for u in lone_ones:
            if g.distance(v, u) == 2:
                junction.add(v)
                remote.add(u)
    return DerivedSets(
        linked_ones=linked_ones,
        linked_twos=linked_twos,
        linked_positive=linked_positive,
        remote_one_count=len(remote),
        junction_twos=frozenset(junction),
    )


@dataclass(frozen=True)
class CopyProfile:
    """Weight bookkeeping of one depth-(t-1) copy over a path base.

    The copy sits at a prefix whose last letter is the anchor vertex.
    left_count / right_count are the base vertices strictly before
    anchor-1 and strictly after anchor+1 in path order; surplus is the
    copy weight minus ceil(2*left/3) minus ceil(2*right/3).  corner_linked
    marks copies whose extreme vertex picked up an extra outside edge.
    """

    prefix: tuple[int, ...]
    anchor: int
    left_count: int
    right_count: int
    weight: int
    surplus: int
    corner_linked: bool


def _ceil_two_thirds(x: int) -> int:
    return -(-2 * x // 3)


def copy_weight_profile(f: RomanFunction, s: SierpinskiGraph) -> list[CopyProfile]:
    """Per-copy weight profiles for S(P_n, t), in prefix order."""
    n = s.base.order
    path_edges = tuple((i, i + 1) for i in range(n - 1))
    if s.base.edges != path_edges:
        raise ValueError("copy profiles are defined over a path base in vertex order")
    if s.depth < 2:
        raise ValueError("profiles need depth at least 2")
    if not is_roman_dominating(f, s.graph):
        raise ContractError("labeling is not Roman dominating on this graph")
    profiles = []
    for pid in range(n ** (s.depth - 1)):
        anchor = pid % n
        block = range(pid * n, (pid + 1) * n)
        w = sum(f.labels[v] for v in block)
        left = max(0, anchor - 1)
        right = max(0, n - anchor - 2)
        surplus = w - _ceil_two_thirds(left) - _ceil_two_thirds(right)
        ext = pid * n + anchor
        corner = s.graph.degree(ext) != s.base.degree(anchor)
        prefix = []
        q = pid
        for _ in range(s.depth - 1):
            q, d = divmod(q, n)
            prefix.append(d)
        profiles.append(
            CopyProfile(
                prefix=tuple(reversed(prefix)),
                anchor=anchor,
                left_count=left,
                right_count=right,
                weight=w,
                surplus=surplus,
                corner_linked=corner,
            )
        )
    return profiles
