"""Forests on labelled vertex sets: parsing, serialization, structural queries."""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import (
    CycleDetected,
    DuplicateEdge,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)

_HEADER = re.compile(r"^n\s*=\s*(\d+)\s*;")
_EDGE = re.compile(r"^(\d+)-(\d+)$")


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _norm_edge(i, j):
    return (i, j) if i < j else (j, i)


def _check_edges(n, vertices, edges, where):
    """Validate an edge sequence; ``where(k)`` gives the line of edge k."""
    seen = set()
    uf = _UnionFind()
    for k, (i, j) in enumerate(edges):
        for v in (i, j):
            if v not in vertices:
                raise VertexOutOfRange(f"vertex {v} not in vertex set of size n={n}", where(k))
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}", where(k))
        e = _norm_edge(i, j)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e[0]}-{e[1]}", where(k))
        seen.add(e)
        if not uf.union(i, j):
            raise CycleDetected(f"edge {e[0]}-{e[1]} closes a cycle", where(k))
    return frozenset(seen)


@dataclass(frozen=True)
class Forest:
    """A simple acyclic graph.

    ``n`` fixes the label range ``1..n``. ``vertices`` is the actual vertex
    set; it defaults to all of ``1..n`` and is smaller only for induced
    subgraphs, which keep the labels of the parent graph.
    """

    n: int
    edges: frozenset = frozenset()
    vertices: frozenset = field(default=None)

    def __post_init__(self):
        if self.n < 0:
            raise ParseError(f"vertex count must be non-negative, got {self.n}")
        verts = frozenset(range(1, self.n + 1)) if self.vertices is None else frozenset(self.vertices)
        for v in verts:
            if not 1 <= v <= self.n:
                raise VertexOutOfRange(f"vertex {v} outside 1..{self.n}")
        edges = list(self.edges)
        # sort so that error messages are reproducible
        edges.sort(key=lambda e: _norm_edge(*e))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", _check_edges(self.n, verts, edges, lambda k: None))

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    def degree(self, i: int) -> int:
        return len(neighborhood(self, i))

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adjacency.values()), default=0)

    @property
    def is_full(self) -> bool:
        return len(self.vertices) == self.n

    def to_text(self) -> str:
        if not self.is_full:
            raise ValueError("text format only represents forests on all of 1..n; use to_json")
        parts = [f"n={self.n};"] + [f"{i}-{j}" for i, j in self.sorted_edges]
        return " ".join(parts) + "\n"

    def to_dict(self) -> dict:
        out = {"n": self.n, "edges": [[i, j] for i, j in self.sorted_edges]}
        if not self.is_full:
            out["vertices"] = sorted(self.vertices)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int):
        raise ParseError('JSON graph must be an object with integer "n"')
    n = doc["n"]
    raw = doc.get("edges", [])
    edges = []
    for k, e in enumerate(raw):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"edge #{k + 1} is not a pair of integers: {e!r}")
        edges.append(tuple(e))
    verts = doc.get("vertices")
    vertex_set = frozenset(range(1, n + 1)) if verts is None else frozenset(verts)
    for v in vertex_set:
        if not 1 <= v <= n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{n}")
    # JSON errors name the edge index rather than a line
    _check_edges(n, vertex_set, edges, lambda k: None)
    return Forest(n, frozenset(_norm_edge(*e) for e in edges), vertex_set if verts is not None else None)


def parse_forest(text: str) -> Forest:
    """Parse the edge-list text format or its JSON equivalent.

    Text format: a header ``n=<int>;`` followed by whitespace separated
    ``i-j`` tokens, possibly over several lines. Lines starting with ``#``
    are comments.

    >>> parse_forest("n=3; 1-2 2-3").sorted_edges
    ((1, 2), (2, 3))
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)

    n = None
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        if n is None:
            m = _HEADER.match(body)
            if not m:
                raise ParseError("expected header 'n=<int>;'", lineno)
            n = int(m.group(1))
            body = body[m.end():]
        for tok in body.split():
            tokens.append((tok, lineno))
    if n is None:
        raise ParseError("empty document, expected header 'n=<int>;'")

    edges, lines = [], []
    for tok, lineno in tokens:
        m = _EDGE.match(tok)
        if not m:
            raise ParseError(f"bad edge token {tok!r}", lineno)
        edges.append((int(m.group(1)), int(m.group(2))))
        lines.append(lineno)
    vertices = frozenset(range(1, n + 1))
    checked = _check_edges(n, vertices, edges, lambda k: lines[k])
    return Forest(n, checked)


def serialize(forest: Forest) -> str:
    return forest.to_text()


def neighborhood(forest: Forest, i: int) -> frozenset:
    try:
        return forest.adjacency[i]
    except KeyError:
        raise VertexOutOfRange(f"vertex {i} is not a vertex of the forest") from None


def induced_subgraph(forest: Forest, keep: Iterable[int]) -> Forest:
    """Subgraph on ``keep``; labels are preserved, no compaction."""
    keep = frozenset(keep)
    for v in keep:
        if v not in forest.vertices:
            raise VertexOutOfRange(f"vertex {v} is not a vertex of the forest")
    edges = frozenset(e for e in forest.edges if e[0] in keep and e[1] in keep)
    return Forest(forest.n, edges, keep)


def peeling_order(forest: Forest) -> list:
    """Vertex order in which each vertex has degree <= 1 among itself and later ones.

    Ties are broken by smallest label, re-evaluated after every removal.
    """
    deg = {v: len(s) for v, s in forest.adjacency.items()}
    heap = [v for v, k in deg.items() if k <= 1]
    heapq.heapify(heap)
    done = set()
    order = []
    while heap:
        v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        order.append(v)
        for u in forest.adjacency[v]:
            if u not in done:
                deg[u] -= 1
                if deg[u] == 1 or deg[u] == 0:
                    heapq.heappush(heap, u)
    assert len(order) == len(forest.vertices), "graph is not a forest"
    return order


def is_peeling_order(forest: Forest, order) -> bool:
    if sorted(order) != sorted(forest.vertices):
        return False
    for k, v in enumerate(order):
        later = set(order[k:])
        if len(forest.adjacency[v] & later) > 1:
            return False
    return True


def path_graph(n: int) -> Forest:
    return Forest(n, frozenset((i, i + 1) for i in range(1, n)))


def star_graph(n: int) -> Forest:
    """K_{1,n-1} with centre 1."""
    return Forest(n, frozenset((1, i) for i in range(2, n + 1)))


def caterpillar_graph(k: int, t) -> Forest:
    """Spine 1..k; spine vertex i gets t[i-1] leaves, numbered consecutively after k."""
    t = list(t)
    if len(t) != k:
        raise ParseError(f"caterpillar needs {k} leaf counts, got {len(t)}")
    edges = {(i, i + 1) for i in range(1, k)}
    nxt = k + 1
    for i, ti in enumerate(t, start=1):
        if ti < 0:
            raise ParseError(f"negative leaf count t_{i}={ti}")
        for _ in range(ti):
            edges.add((i, nxt))
            nxt += 1
    return Forest(nxt - 1, frozenset(edges))


def random_forest(rng, n: int, attach_prob: float = 0.85, hub_bias: float = 0.5) -> Forest:
    """Random forest on 1..n with shuffled labels.

    Each new vertex joins an earlier one with probability ``attach_prob``;
    with probability ``hub_bias`` the parent is drawn from the first three
    vertices, which produces the high-degree vertices the decomposition cares
    about.
    """
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    edges = set()
    for k in range(1, n):
        if rng.random() >= attach_prob:
            continue
        if rng.random() < hub_bias:
            p = rng.randrange(min(k, 3))
        else:
            p = rng.randrange(k)
        edges.add(_norm_edge(labels[k], labels[p]))
    return Forest(n, frozenset(edges))
