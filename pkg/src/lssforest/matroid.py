"""Paving matroids given by their dependent hyperplanes, and realizations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import DimensionTooSmall, ElementOutsideGround, ShapeMismatch, ValidationError
from .graph import Forest
from .linalg import RationalMatrix, bareiss_det, bareiss_rank


@dataclass(frozen=True)
class PavingMatroid:
    """Rank-``rank_d`` paving matroid on ``ground``.

    A paving matroid is fully described by its dependent hyperplanes: every
    set of size < rank_d is independent, and a larger set has rank
    ``rank_d - 1`` exactly when it fits inside a hyperplane.
    """

    ground: frozenset
    rank_d: int
    hyperplanes: tuple

    def __post_init__(self):
        ground = frozenset(self.ground)
        hyps = tuple(sorted((frozenset(h) for h in self.hyperplanes), key=sorted))
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "hyperplanes", hyps)
        if self.rank_d < 1:
            raise ValidationError(f"rank must be positive, got {self.rank_d}")
        for h in hyps:
            if not h <= ground:
                raise ElementOutsideGround(f"hyperplane {sorted(h)} not contained in ground set")
            if len(h) < self.rank_d:
                raise ValidationError(f"hyperplane {sorted(h)} has fewer than {self.rank_d} elements")
        for a, b in combinations(hyps, 2):
            if len(a & b) > self.rank_d - 2:
                raise ValidationError(
                    f"hyperplanes {sorted(a)} and {sorted(b)} meet in {len(a & b)} > d-2 elements"
                )

    def hyperplane_containing(self, A: frozenset):
        """The unique hyperplane containing ``A`` (|A| >= d-1 assumed), or None."""
        hits = [h for h in self.hyperplanes if A <= h]
        if __debug__ and len(A) >= self.rank_d - 1:
            assert len(hits) <= 1, "paving condition violated"
        return hits[0] if hits else None

    def to_dict(self) -> dict:
        return {
            "ground": sorted(self.ground),
            "rank": self.rank_d,
            "hyperplanes": [sorted(h) for h in self.hyperplanes],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> "PavingMatroid":
        return cls(frozenset(doc["ground"]), doc["rank"], tuple(frozenset(h) for h in doc["hyperplanes"]))


def matroid_of_forest(forest: Forest, d: int) -> PavingMatroid:
    """Paving matroid whose dependent hyperplanes are the neighbourhoods of size >= d."""
    if d < 3:
        raise DimensionTooSmall(f"d must be at least 3, got {d}")
    hyps = [nb for nb in forest.adjacency.values() if len(nb) >= d]
    # a forest has no 4-cycle, so two neighbourhoods share at most one vertex
    for a, b in combinations(hyps, 2):
        assert len(a & b) <= 1, "forest neighbourhoods intersect in more than one vertex"
    return PavingMatroid(forest.vertices, d, tuple(hyps))


def paving_rank(M: PavingMatroid, A: Iterable[int]) -> int:
    A = frozenset(A)
    if not A <= M.ground:
        raise ElementOutsideGround(f"elements {sorted(A - M.ground)} not in ground set")
    d = M.rank_d
    if len(A) <= d - 1:
        return len(A)
    return d - 1 if M.hyperplane_containing(A) is not None else d


def realized_matroid_equals(V: RationalMatrix, M: PavingMatroid) -> bool:
    """Whether the rows of ``V`` realize ``M`` exactly.

    Row k of ``V`` is the vector of the k-th smallest ground element. The
    test is: every hyperplane has rank d-1, and every d-subset outside all
    hyperplanes has rank d (no extra dependencies). Small ground sets and
    hyperplanes equal to the whole ground set need the (d-1)-subsets too.
    """
    d = M.rank_d
    labels = sorted(M.ground)
    if V.nrows != len(labels) or V.ncols != d:
        raise ShapeMismatch(f"expected {len(labels)}x{d} matrix, got {V.nrows}x{V.ncols}")
    pos = {v: k for k, v in enumerate(labels)}
    ints = V.integer_rows()

    def rank_of(subset):
        return bareiss_rank([list(ints[pos[v]]) for v in subset])

    for h in M.hyperplanes:
        if rank_of(sorted(h)) != d - 1:
            return False
    if len(labels) < d:
        return rank_of(labels) == len(labels)
    for A in combinations(labels, d):
        if M.hyperplane_containing(frozenset(A)) is None:
            if bareiss_det([list(ints[pos[v]]) for v in A]) == 0:
                return False
    if any(h == M.ground for h in M.hyperplanes):
        for A in combinations(labels, d - 1):
            if rank_of(A) != d - 1:
                return False
    return True
