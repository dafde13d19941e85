"""Admissible subsets, component dimensions and closed forms for special trees.

For a forest G and d >= 3 the irreducible components of the variety of
orthogonal representations are indexed by the admissible vertex subsets S:
every i in S keeps at least d neighbours outside S, and that surviving
neighbourhood is not contained in the surviving neighbourhood of another
surviving vertex. The component for S has dimension
``d * (n - |S|) - |E(G - S)|``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import (
    DimensionTooSmall,
    NotAdmissible,
    NotBinaryTree,
    SearchSpaceTooLarge,
    VertexOutOfRange,
)
from .graph import Forest, induced_subgraph, neighborhood
from .matroid import matroid_of_forest, paving_rank

DEFAULT_SEARCH_CAP = 24


@dataclass(frozen=True)
class ComponentReport:
    S: tuple
    dim: int
    induced_edge_count: int
    witness: dict | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {"S": list(self.S), "dim": self.dim, "induced_edges": self.induced_edge_count}


@dataclass(frozen=True)
class DecompositionResult:
    n: int
    d: int
    components: tuple

    @property
    def variety_dim(self) -> int:
        return max(c.dim for c in self.components)

    @property
    def subsets(self) -> list:
        return [c.S for c in self.components]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "components": [c.to_dict() for c in self.components],
            "variety_dim": self.variety_dim,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _order_key(S):
    return (len(S), tuple(S))


def _check_args(forest, d, S):
    if d < 3:
        raise DimensionTooSmall(f"d must be at least 3, got {d}")
    S = frozenset(S)
    bad = S - forest.vertices
    if bad:
        raise VertexOutOfRange(f"vertices {sorted(bad)} not in the forest")
    return S


def is_admissible(forest: Forest, d: int, S: Iterable[int]) -> bool:
    """Combinatorial form: surviving degree >= d plus non-containment."""
    S = _check_args(forest, d, S)
    rest = forest.vertices - S
    for i in S:
        surv = neighborhood(forest, i) & rest
        if len(surv) < d:
            return False
        for j in rest:
            if surv <= (neighborhood(forest, j) & rest):
                return False
    return True


def is_admissible_rank(forest: Forest, d: int, S: Iterable[int]) -> bool:
    """Matroid form: each surviving neighbourhood has full rank d in M(G - S)."""
    S = _check_args(forest, d, S)
    rest = forest.vertices - S
    M = matroid_of_forest(induced_subgraph(forest, rest), d)
    return all(paving_rank(M, neighborhood(forest, i) & rest) == d for i in S)


def induced_edge_count(forest: Forest, S: Iterable[int]) -> int:
    S = frozenset(S)
    return sum(1 for i, j in forest.edges if i not in S and j not in S)


def component_dimension(forest: Forest, d: int, S: Iterable[int]) -> int:
    S = frozenset(S)
    if not is_admissible(forest, d, S):
        raise NotAdmissible(f"S={sorted(S)} is not admissible for d={d}")
    return _dim(forest, d, S)


def _dim(forest, d, S):
    return d * (len(forest.vertices) - len(S)) - induced_edge_count(forest, S)


def admissibility_witness(forest: Forest, d: int, S: Iterable[int]) -> dict:
    """For each i in S, the lexicographically first d-subset of its surviving
    neighbourhood that has rank d in M(G - S). Missing keys mean no such subset."""
    S = frozenset(S)
    rest = forest.vertices - S
    M = matroid_of_forest(induced_subgraph(forest, rest), d)
    out = {}
    for i in sorted(S):
        surv = sorted(neighborhood(forest, i) & rest)
        for T in combinations(surv, d):
            if paving_rank(M, T) == d:
                out[i] = T
                break
    return out


def high_degree_vertices(forest: Forest, d: int) -> list:
    return sorted(v for v, nb in forest.adjacency.items() if len(nb) >= d)


def enumerate_admissible(forest: Forest, d: int, cap: int = DEFAULT_SEARCH_CAP,
                         with_witness: bool = False) -> DecompositionResult:
    """All admissible subsets with their component dimensions.

    Only vertices of degree >= d can belong to an admissible set, so the
    search runs over subsets of those.
    """
    if d < 3:
        raise DimensionTooSmall(f"d must be at least 3, got {d}")
    H = high_degree_vertices(forest, d)
    if len(H) > cap:
        raise SearchSpaceTooLarge(
            f"{len(H)} candidate vertices of degree >= {d} exceed the cap {cap}; raise the cap"
        )
    comps = []
    for size in range(len(H) + 1):
        for S in combinations(H, size):
            if is_admissible(forest, d, S):
                wit = admissibility_witness(forest, d, S) if with_witness else None
                comps.append(ComponentReport(S, _dim(forest, d, S), induced_edge_count(forest, S), wit))
    comps.sort(key=lambda c: _order_key(c.S))
    return DecompositionResult(forest.n, d, tuple(comps))


def star_oracle(n: int, d: int) -> DecompositionResult:
    """K_{1,n-1}: the centre alone can be removed, and only when n-1 >= d."""
    comps = [ComponentReport((), d * n - (n - 1), n - 1)]
    if n - 1 >= d:
        comps.append(ComponentReport((1,), d * n - d, 0))
    return DecompositionResult(n, d, tuple(comps))


def caterpillar_oracle(k: int, t, d: int) -> DecompositionResult:
    """Caterpillar with spine 1..k and t[i-1] leaves on spine vertex i.

    A spine subset S is admissible iff each i in S has either t_i >= d, or
    t_i = d-1 and a spine neighbour outside S, or t_i = d-2 and both spine
    neighbours outside S.
    """
    t = list(t)
    n = k + sum(t)

    def spine_nbrs(i):
        return [j for j in (i - 1, i + 1) if 1 <= j <= k]

    comps = []
    for size in range(k + 1):
        for S in combinations(range(1, k + 1), size):
            Sset = set(S)
            ok = True
            for i in S:
                free = sum(1 for j in spine_nbrs(i) if j not in Sset)
                ti = t[i - 1]
                if not (ti >= d or (ti == d - 1 and free >= 1) or (ti == d - 2 and free == 2)):
                    ok = False
                    break
            if not ok:
                continue
            spine_edges = sum(1 for i in range(1, k) if i not in Sset and i + 1 not in Sset)
            leaf_edges = sum(t[i - 1] for i in range(1, k + 1) if i not in Sset)
            induced = spine_edges + leaf_edges
            comps.append(ComponentReport(S, d * (n - len(S)) - induced, induced))
    comps.sort(key=lambda c: _order_key(c.S))
    return DecompositionResult(n, d, tuple(comps))


def _is_tree(forest):
    return len(forest.edges) == len(forest.vertices) - 1 if forest.vertices else True


def binary_tree_oracle(forest: Forest, d: int) -> DecompositionResult:
    """Binary trees (max degree <= 3).

    For d >= 4 only the empty set is admissible; for d = 3 the admissible
    sets are the independent sets of degree-3 vertices, all of dimension 2n+1.
    """
    if d < 3:
        raise DimensionTooSmall(f"d must be at least 3, got {d}")
    if not _is_tree(forest):
        raise NotBinaryTree("graph is not connected")
    if forest.max_degree > 3:
        raise NotBinaryTree(f"maximum degree {forest.max_degree} > 3")
    n = len(forest.vertices)
    m = len(forest.edges)
    if d >= 4:
        return DecompositionResult(forest.n, d, (ComponentReport((), d * n - m, m),))
    cubic = sorted(v for v, nb in forest.adjacency.items() if len(nb) == 3)
    comps = []
    for size in range(len(cubic) + 1):
        for S in combinations(cubic, size):
            if any(forest.adjacency[a] & set(S) for a in S):
                continue
            comps.append(ComponentReport(S, 2 * n + 1, m - 3 * len(S)))
    comps.sort(key=lambda c: _order_key(c.S))
    return DecompositionResult(forest.n, d, tuple(comps))
