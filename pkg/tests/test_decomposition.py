import random
from itertools import combinations

import pytest

from lssforest.decomposition import (
    admissibility_witness,
    binary_tree_oracle,
    caterpillar_oracle,
    component_dimension,
    enumerate_admissible,
    high_degree_vertices,
    is_admissible,
    is_admissible_rank,
    star_oracle,
)
from lssforest.errors import (
    DimensionTooSmall,
    NotAdmissible,
    NotBinaryTree,
    SearchSpaceTooLarge,
    VertexOutOfRange,
)
from lssforest.graph import Forest, caterpillar_graph, induced_subgraph, neighborhood, path_graph, star_graph
from lssforest.matroid import matroid_of_forest, paving_rank
from conftest import forest_family
from oracles import independent_sets


def summary(result):
    return [(c.S, c.dim) for c in result.components]


def test_figure1_components(fig1):
    res = enumerate_admissible(fig1, 4)
    assert res.subsets == [(), (2,), (3,), (5,), (3, 5)]
    assert {c.dim for c in res.components} == {34}
    assert res.variety_dim == 34


def test_figure1_examples(fig1):
    assert is_admissible(fig1, 4, {3, 5})
    assert is_admissible(fig1, 4, set())
    assert not is_admissible(fig1, 4, {2, 3})
    assert is_admissible_rank(fig1, 4, {5})
    assert component_dimension(fig1, 4, set()) == 34
    assert component_dimension(fig1, 4, {3, 5}) == 34
    with pytest.raises(NotAdmissible):
        component_dimension(fig1, 4, {2, 3})


def test_two_three_fails_on_surviving_count(fig1):
    # independent count: 2 keeps only 1, 4, 5 once 3 is gone
    rest = set(range(1, 12)) - {2, 3}
    assert len(neighborhood(fig1, 2) & rest) == 3


def test_argument_errors(fig1):
    with pytest.raises(DimensionTooSmall):
        is_admissible(fig1, 2, set())
    with pytest.raises(VertexOutOfRange):
        is_admissible(fig1, 4, {12})


def test_path_only_empty():
    res = enumerate_admissible(path_graph(6), 3)
    assert summary(res) == [((), 13)]


def test_star_d5():
    res = enumerate_admissible(star_graph(8), 5)
    assert summary(res) == [((), 33), ((1,), 35)]
    assert component_dimension(star_graph(8), 4, {1}) == 28
    assert is_admissible_rank(star_graph(8), 4, {1})


@pytest.mark.parametrize("d", range(3, 11))
def test_star_n8_all_d(d):
    n = 8
    res = enumerate_admissible(star_graph(n), d)
    assert len(res.components) == (2 if d <= 7 else 1)
    dims = {c.dim for c in res.components}
    assert dims <= {d * n - (n - 1), d * n - d}
    assert res.variety_dim == max(dims)
    assert summary(res) == summary(star_oracle(n, d))


def test_star_oracle_examples():
    assert sorted(c.dim for c in star_oracle(8, 4).components) == [25, 28]
    assert star_oracle(8, 4).variety_dim == 28
    assert len(star_oracle(8, 8).components) == 1
    assert summary(star_oracle(2, 3)) == [((), 5)]


def test_caterpillar_example():
    t = (0, 4, 0, 2, 1, 2, 3, 3, 0)
    expected = {(): 97, (7,): 97, (8,): 97, (2,): 98, (2, 7): 98, (2, 8): 98}
    for res in (caterpillar_oracle(9, t, 5), enumerate_admissible(caterpillar_graph(9, t), 5)):
        assert dict(summary(res)) == expected
    assert sorted(c.dim for c in caterpillar_oracle(9, t, 5).components) == [97, 97, 97, 98, 98, 98]


def test_caterpillar_small_cases():
    assert caterpillar_oracle(1, (0,), 3).subsets == [()]
    res = enumerate_admissible(caterpillar_graph(2, (5, 0)), 5)
    assert res.subsets == [(), (1,)]
    assert summary(caterpillar_oracle(2, (5, 0), 5)) == summary(res)


def test_binary_figure5(fig5):
    res = enumerate_admissible(fig5, 3)
    assert sorted(res.subsets) == sorted([(), (3,), (5,), (6,), (5, 6)])
    assert {c.dim for c in res.components} == {23}
    assert summary(binary_tree_oracle(fig5, 3)) == summary(res)
    for d in (4, 5):
        assert enumerate_admissible(fig5, d).subsets == [()]
        assert binary_tree_oracle(fig5, d).subsets == [()]


def test_binary_oracle_rejects(fig1):
    with pytest.raises(NotBinaryTree):
        binary_tree_oracle(fig1, 3)
    with pytest.raises(NotBinaryTree):
        binary_tree_oracle(Forest(3, frozenset({(1, 2)})), 3)
    assert binary_tree_oracle(path_graph(5), 3).subsets == [()]


def test_admissibility_forms_agree():
    rng = random.Random(6)
    for F in forest_family(16, 80, 12):
        d = rng.choice([3, 4, 5])
        H = high_degree_vertices(F, d)
        for k in range(len(H) + 1):
            for S in combinations(H, k):
                assert is_admissible(F, d, S) == is_admissible_rank(F, d, S)


def _random_binary_tree(rng, n):
    edges = set()
    deg = {1: 0}
    for v in range(2, n + 1):
        parent = rng.choice([u for u in deg if deg[u] < 3])
        edges.add((parent, v))
        deg[parent] += 1
        deg[v] = 1
    return Forest(n, frozenset(edges))


def test_oracles_match_enumeration_on_random_parameters():
    rng = random.Random(77)
    for _ in range(100):
        n, d = rng.randint(2, 12), rng.randint(3, 8)
        assert summary(star_oracle(n, d)) == summary(enumerate_admissible(star_graph(n), d))
    for _ in range(100):
        k = rng.randint(1, 7)
        t = tuple(rng.randint(0, 6) for _ in range(k))
        d = rng.randint(3, 6)
        assert summary(caterpillar_oracle(k, t, d)) == summary(enumerate_admissible(caterpillar_graph(k, t), d))
    for _ in range(100):
        F = _random_binary_tree(rng, rng.randint(1, 16))
        d = rng.randint(3, 5)
        assert summary(binary_tree_oracle(F, d)) == summary(enumerate_admissible(F, d))


def test_binary_d3_counts_independent_sets():
    rng = random.Random(8)
    for _ in range(30):
        F = _random_binary_tree(rng, rng.randint(4, 16))
        cubic = [v for v in F.vertices if F.degree(v) == 3]
        res = enumerate_admissible(F, 3)
        assert len(res.components) == len(independent_sets(cubic, F.edges))
        assert {c.dim for c in res.components} == {2 * F.n + 1}


def test_invariants_on_random_forests():
    rng = random.Random(12)
    for F in forest_family(21, 100, 14):
        d = rng.randint(3, 5)
        res = enumerate_admissible(F, d, with_witness=True)
        assert res.components[0].S == ()
        assert len(set(res.subsets)) == len(res.subsets)
        assert res.variety_dim == max(c.dim for c in res.components)
        for c in res.components:
            assert all(F.degree(i) >= d for i in c.S)
            assert c.dim == d * (len(F.vertices) - len(c.S)) - c.induced_edge_count
            rest = F.vertices - set(c.S)
            M = matroid_of_forest(induced_subgraph(F, rest), d)
            for i, T in c.witness.items():
                assert len(T) == d and set(T) <= neighborhood(F, i) & rest
                assert paving_rank(M, T) == d
        if d > F.max_degree:
            assert res.subsets == [()]


def test_isolated_vertices_dimension():
    F = Forest(4)
    res = enumerate_admissible(F, 3)
    assert summary(res) == [((), 12)]


def test_search_cap():
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_admissible(star_graph(5), 3, cap=0)
    assert enumerate_admissible(star_graph(5), 3, cap=1).subsets == [(), (1,)]


def test_witness_only_for_admissible(fig1):
    assert admissibility_witness(fig1, 4, {3, 5}) == {3: (2, 6, 7, 8), 5: (2, 9, 10, 11)}
    assert 2 not in admissibility_witness(fig1, 4, {2, 3})


def test_json_layout(fig1):
    doc = enumerate_admissible(fig1, 4).to_dict()
    assert doc["n"] == 11 and doc["d"] == 4 and doc["variety_dim"] == 34
    assert doc["components"][4] == {"S": [3, 5], "dim": 34, "induced_edges": 2}
