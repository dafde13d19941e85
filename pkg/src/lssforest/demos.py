"""Built-in example graphs, addressable by short names such as ``star:8``."""

from __future__ import annotations

from .errors import ValidationError
from .graph import Forest, caterpillar_graph, path_graph, star_graph

# Tree on [11] with N(2) = {1,3,4,5}, N(3) = {2,6,7,8}, N(5) = {2,9,10,11};
# these three neighbourhoods fix every edge.
FIGURE1_EDGES = ((1, 2), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7), (3, 8), (5, 9), (5, 10), (5, 11))

# Binary tree on [11] whose degree-3 vertices are exactly 3, 5, 6 with 3
# adjacent to both 5 and 6; for d = 3 the admissible sets only depend on
# this pattern, so any tree with it gives the same five components.
FIGURE5_EDGES = ((1, 2), (1, 3), (3, 5), (3, 6), (5, 7), (5, 8), (6, 9), (6, 10), (2, 4), (4, 11))

CATERPILLAR_EXAMPLE = (9, (0, 4, 0, 2, 1, 2, 3, 3, 0))


def figure1() -> Forest:
    return Forest(11, frozenset(FIGURE1_EDGES))


def binary_figure5() -> Forest:
    return Forest(11, frozenset(FIGURE5_EDGES))


DEMO_NAMES = ("figure1", "star:8", "caterpillar:9:0,4,0,2,1,2,3,3,0", "binary-figure5", "path:6")


class DemoSpecError(ValidationError):
    pass


def _int(s, what):
    try:
        v = int(s)
    except ValueError:
        raise DemoSpecError(f"{what} must be an integer, got {s!r}") from None
    if v < 1:
        raise DemoSpecError(f"{what} must be positive, got {v}")
    return v


def demo_graph(name: str) -> Forest:
    """figure1 | binary-figure5 | star:n | path:n | caterpillar:k:t1,...,tk"""
    parts = name.split(":")
    kind = parts[0]
    if kind == "figure1" and len(parts) == 1:
        return figure1()
    if kind == "binary-figure5" and len(parts) == 1:
        return binary_figure5()
    if kind == "star" and len(parts) == 2:
        n = _int(parts[1], "star size")
        if n < 2:
            raise DemoSpecError("star needs at least 2 vertices")
        return star_graph(n)
    if kind == "path" and len(parts) == 2:
        return path_graph(_int(parts[1], "path length"))
    if kind == "caterpillar" and len(parts) == 3:
        k = _int(parts[1], "spine length")
        try:
            t = [int(s) for s in parts[2].split(",")] if parts[2] else []
        except ValueError:
            raise DemoSpecError(f"bad leaf counts {parts[2]!r}") from None
        if len(t) != k or any(ti < 0 for ti in t):
            raise DemoSpecError(f"caterpillar needs {k} non-negative leaf counts")
        return caterpillar_graph(k, t)
    raise DemoSpecError(
        f"unknown demo {name!r}; expected figure1, binary-figure5, star:n, path:n or caterpillar:k:t1,...,tk"
    )
