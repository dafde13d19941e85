import random
from itertools import combinations

import pytest

from lssforest.decomposition import is_admissible
from lssforest.errors import DimensionTooSmall, ElementOutsideGround, ValidationError
from lssforest.graph import path_graph, star_graph
from lssforest.linalg import RationalMatrix
from lssforest.matroid import PavingMatroid, matroid_of_forest, paving_rank, realized_matroid_equals
from conftest import forest_family


def test_figure1_hyperplanes(fig1):
    M = matroid_of_forest(fig1, 4)
    assert {frozenset(h) for h in M.hyperplanes} == {
        frozenset({1, 3, 4, 5}), frozenset({2, 6, 7, 8}), frozenset({2, 9, 10, 11})}
    assert M.to_dict() == {"ground": list(range(1, 12)), "rank": 4,
                           "hyperplanes": [[1, 3, 4, 5], [2, 6, 7, 8], [2, 9, 10, 11]]}


def test_path_has_no_hyperplanes():
    assert matroid_of_forest(path_graph(5), 3).hyperplanes == ()


def test_star_single_hyperplane():
    M = matroid_of_forest(star_graph(8), 4)
    assert [set(h) for h in M.hyperplanes] == [set(range(2, 9))]


def test_d_below_three_rejected(fig1):
    with pytest.raises(DimensionTooSmall):
        matroid_of_forest(fig1, 2)


def test_paving_rank_examples(fig1):
    M = matroid_of_forest(fig1, 4)
    assert paving_rank(M, {1, 3, 4, 5}) == 3
    assert paving_rank(M, set()) == 0
    assert paving_rank(M, {1, 2, 6, 9}) == 4
    assert paving_rank(M, {1, 3, 4}) == 3
    assert paving_rank(M, range(1, 12)) == 4
    with pytest.raises(ElementOutsideGround):
        paving_rank(M, {12})


def test_paving_condition_enforced():
    with pytest.raises(ValidationError):
        PavingMatroid(frozenset(range(1, 7)), 3, (frozenset({1, 2, 3}), frozenset({2, 3, 4})))


def _rank_properties(M):
    ground = sorted(M.ground)
    subsets = [frozenset(A) for k in range(len(ground) + 1) for A in combinations(ground, k)]
    rank = {A: paving_rank(M, A) for A in subsets}
    for A in subsets:
        assert 0 <= rank[A] <= len(A)
        if len(A) == M.rank_d - 1:
            assert rank[A] == M.rank_d - 1
        for x in ground:
            if x not in A:
                # unit increase is equivalent to monotone + submodular on chains
                assert rank[A] <= rank[A | {x}] <= rank[A] + 1
    return rank, subsets


def test_monotone_and_submodular_exhaustive():
    rng = random.Random(11)
    for F in forest_family(3, 12, 8, min_n=5):
        d = rng.choice([3, 4])
        M = matroid_of_forest(F, d)
        rank, subsets = _rank_properties(M)
        for A in subsets[:: max(1, len(subsets) // 40)]:
            for B in subsets:
                assert rank[A | B] + rank[A & B] <= rank[A] + rank[B]
                if A <= B:
                    assert rank[A] <= rank[B]


def test_random_forests_pairwise_intersections():
    rng = random.Random(4)
    for F in forest_family(1, 200, 20):
        M = matroid_of_forest(F, rng.choice([3, 4, 5]))
        for h1, h2 in combinations(M.hyperplanes, 2):
            assert len(h1 & h2) <= 1


def test_realized_duplicate_rows_false():
    M = PavingMatroid(frozenset({1, 2, 3}), 3, ())
    V = RationalMatrix([[1, 2, 3], [1, 2, 3], [0, 0, 1]])
    assert not realized_matroid_equals(V, M)


def test_realized_free_matroid_iff_det_nonzero():
    M = PavingMatroid(frozenset({1, 2, 3}), 3, ())
    assert realized_matroid_equals(RationalMatrix([[1, 0, 0], [1, 1, 0], [1, 1, 1]]), M)
    assert not realized_matroid_equals(RationalMatrix([[1, 0, 0], [0, 1, 0], [1, 1, 0]]), M)


def test_realized_missing_dependency_false():
    # {1,2,3,4} should be a hyperplane of rank 3, but these rows span Q^4
    M = PavingMatroid(frozenset(range(1, 6)), 4, (frozenset({1, 2, 3, 4}),))
    V = RationalMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]])
    assert not realized_matroid_equals(V, M)
    W = RationalMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0], [1, 2, 3, 4]])
    assert realized_matroid_equals(W, M)


def test_hyperplane_rank_matches_admissibility_rank_form(fig1):
    # a vertex whose surviving neighbourhood is a hyperplane has rank d-1
    M = matroid_of_forest(fig1, 4)
    assert paving_rank(M, {6, 7, 8, 2}) == 3
    assert not is_admissible(fig1, 4, {3, 2})


def test_json_round_trip(fig1):
    M = matroid_of_forest(fig1, 4)
    assert PavingMatroid.from_dict(M.to_dict()) == M
