"""Exact random points on the strata U(S) and certificates built on them.

Points are n x d matrices of Fractions, row i holding the vector of vertex i.
Genericity is obtained by drawing random rationals and retrying until the
faithfulness and matroid-realization checks pass; every check is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .decomposition import (
    admissibility_witness,
    component_dimension,
    enumerate_admissible,
)
from .errors import (
    DimensionTooSmall,
    SamplingFailed,
    ShapeMismatch,
    ValidationError,
    VertexOutOfRange,
    WitnessNotFound,
    ZeroRowPresent,
)
from .graph import Forest, induced_subgraph, neighborhood, peeling_order
from .ideal import GeneratorSet
from .linalg import RationalMatrix, dot, nullspace
from .matroid import matroid_of_forest, paving_rank, realized_matroid_equals


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    pool: int = 100
    max_retries: int = 50

    def __post_init__(self):
        if self.pool < 2:
            raise ValidationError(f"pool bound must be >= 2, got {self.pool}")
        if self.max_retries < 1:
            raise ValidationError(f"max_retries must be >= 1, got {self.max_retries}")

    def rng(self, *task) -> random.Random:
        """Independent stream for a task; str seeds hash deterministically."""
        return random.Random(repr((self.seed,) + tuple(task)))


def _rand_rational(rng, B):
    return Fraction(rng.randint(-B, B), rng.randint(1, B))


def _rand_vector(rng, d, B):
    while True:
        v = tuple(_rand_rational(rng, B) for _ in range(d))
        if any(v):
            return v


def _rand_in_span(rng, basis, B):
    d = len(basis[0])
    while True:
        coeffs = [_rand_rational(rng, B) for _ in basis]
        v = tuple(sum((c * b[k] for c, b in zip(coeffs, basis)), Fraction(0)) for k in range(d))
        if any(v):
            return v


def _point_from_vectors(n, d, vectors):
    zero = (Fraction(0),) * d
    return RationalMatrix([vectors.get(i, zero) for i in range(1, n + 1)], d)


def _draw(forest, d, rng, B):
    """One pass of the leaf-peeling construction; no genericity check."""
    order = peeling_order(forest)
    vecs = {}
    for v in reversed(order):
        placed = [u for u in forest.adjacency[v] if u in vecs]
        if not placed:
            vecs[v] = _rand_vector(rng, d, B)
        else:
            (u,) = placed
            vecs[v] = _rand_in_span(rng, nullspace([vecs[u]], d), B)
    return vecs


def _restricted(point: RationalMatrix, labels):
    return point.submatrix(labels)


def check_orthogonality(point: RationalMatrix, forest: Forest) -> list:
    """Edges (i, j) with v_i . v_j != 0, as (i, j, value) triples."""
    if point.nrows != forest.n:
        raise ShapeMismatch(f"point has {point.nrows} rows, forest has n={forest.n}")
    bad = []
    for i, j in forest.sorted_edges:
        val = dot(point.row(i), point.row(j))
        if val != 0:
            bad.append((i, j, val))
    return bad


def check_faithful(point: RationalMatrix, forest: Forest) -> bool:
    """True iff v_i . v_j != 0 for every pair of distinct non-adjacent vertices."""
    if point.nrows != forest.n:
        raise ShapeMismatch(f"point has {point.nrows} rows, forest has n={forest.n}")
    verts = sorted(forest.vertices)
    for i in verts:
        if point.is_zero_row(i):
            raise ZeroRowPresent(f"row {i} is zero")
    for i, j in combinations(verts, 2):
        if (i, j) in forest.edges:
            continue
        if dot(point.row(i), point.row(j)) == 0:
            return False
    return True


def check_realizes(point: RationalMatrix, forest: Forest, d: int) -> bool:
    """Rows on the forest's vertices realize M(forest)."""
    M = matroid_of_forest(forest, d)
    return realized_matroid_equals(_restricted(point, sorted(forest.vertices)), M)


def _sample_generic(forest, d, cfg, task):
    if d < 3:
        raise DimensionTooSmall(f"d must be at least 3, got {d}")
    failures = {"faithful": 0, "realize": 0}
    for attempt in range(cfg.max_retries):
        rng = cfg.rng(*task, attempt)
        p = _point_from_vectors(forest.n, d, _draw(forest, d, rng, cfg.pool))
        if not check_faithful(p, forest):
            failures["faithful"] += 1
            continue
        if not check_realizes(p, forest, d):
            failures["realize"] += 1
            continue
        return p, attempt
    raise SamplingFailed(
        f"no generic point after {cfg.max_retries} draws "
        f"(faithfulness failed {failures['faithful']}x, realization failed {failures['realize']}x)"
    )


def sample_UG(forest: Forest, d: int, cfg: SampleConfig = SampleConfig(), task=("UG",)) -> RationalMatrix:
    """A point with all rows nonzero, orthogonal on edges, faithful, realizing M(G).

    Rows of labels outside ``forest.vertices`` (induced forests) are zero.
    """
    return _sample_generic(forest, d, cfg, tuple(task))[0]


def sample_VS(forest: Forest, d: int, S: Iterable[int], cfg: SampleConfig = SampleConfig(),
              task=("VS",)) -> RationalMatrix:
    """A point of F(S): rows in S zero, the rest generic for G - S."""
    S = frozenset(S)
    if not S <= forest.vertices:
        raise VertexOutOfRange(f"vertices {sorted(S - forest.vertices)} not in the forest")
    if not S:
        return sample_UG(forest, d, cfg, task)
    rest = induced_subgraph(forest, forest.vertices - S)
    return _sample_generic(rest, d, cfg, tuple(task) + (tuple(sorted(S)),))[0]


# -- Jacobian -----------------------------------------------------------------

@dataclass(frozen=True)
class JacobianResult:
    status: str
    rank: int
    ambient: int
    expected_dim: int
    resamples: int

    @property
    def confirmed(self) -> bool:
        return self.status == "confirmed"

    def to_dict(self) -> dict:
        return {"status": self.status, "rank": self.rank, "ambient": self.ambient,
                "expected_dim": self.expected_dim, "resamples": self.resamples}


def jacobian_matrix(forest: Forest, d: int, point: RationalMatrix) -> list:
    """Integer-free |E| x nd Jacobian of the edge quadrics at ``point``."""
    rows = []
    nd = forest.n * d
    for i, j in forest.sorted_edges:
        r = [Fraction(0)] * nd
        vi, vj = point.row(i), point.row(j)
        for k in range(d):
            r[(i - 1) * d + k] = vj[k]
            r[(j - 1) * d + k] = vi[k]
        rows.append(r)
    return rows


def jacobian_rank(forest: Forest, d: int, point: RationalMatrix) -> int:
    J = jacobian_matrix(forest, d, point)
    if not J:
        return 0
    return RationalMatrix(J, forest.n * d).rank()


def jacobian_dimension_check(forest: Forest, d: int, S: Iterable[int],
                             cfg: SampleConfig = SampleConfig()) -> JacobianResult:
    """Compare nd - rank(Jacobian at a point of F(S)) with the dimension formula."""
    S = tuple(sorted(set(S)))
    expected = component_dimension(forest, d, S)
    nd = len(forest.vertices) * d
    rank = -1
    for attempt in range(cfg.max_retries):
        p = sample_VS(forest, d, S, cfg, task=("jacobian", attempt))
        rank = jacobian_rank(forest, d, p)
        if nd - rank == expected:
            return JacobianResult("confirmed", rank, nd, expected, attempt)
    return JacobianResult("inconclusive", rank, nd, expected, cfg.max_retries)


# -- degeneration -------------------------------------------------------------

@dataclass(frozen=True)
class DegenerationWitness:
    S: tuple
    vertex: int
    w: tuple
    point: RationalMatrix = field(repr=False)
    moved: RationalMatrix = field(repr=False)
    in_variety: bool
    zero_set_ok: bool

    @property
    def ok(self) -> bool:
        return self.in_variety and self.zero_set_ok

    def to_dict(self) -> dict:
        return {"S": list(self.S), "vertex": self.vertex, "w": [str(c) for c in self.w],
                "ok": self.ok}


def rank_deficient_vertex(forest: Forest, d: int, S: Iterable[int]):
    """First i in S whose surviving neighbourhood has rank < d in M(G - S)."""
    S = frozenset(S)
    rest = forest.vertices - S
    M = matroid_of_forest(induced_subgraph(forest, rest), d)
    for i in sorted(S):
        if paving_rank(M, neighborhood(forest, i) & rest) < d:
            return i
    return None


def degeneration_witness(forest: Forest, d: int, S: Iterable[int],
                         cfg: SampleConfig = SampleConfig()) -> DegenerationWitness:
    """Move row i of a point of F(S) to a nonzero w orthogonal to its surviving
    neighbours, landing in U(S - {i}); this exhibits V_S inside V_{S - {i}}."""
    S = tuple(sorted(set(S)))
    i = rank_deficient_vertex(forest, d, S)
    if i is None:
        raise WitnessNotFound(f"every vertex of S={list(S)} has full rank; S is admissible")
    p = sample_VS(forest, d, S, cfg, task=("degeneration",))
    rest = forest.vertices - set(S)
    surv = sorted(neighborhood(forest, i) & rest)
    basis = nullspace([p.row(k) for k in surv], d)
    if not basis:
        raise WitnessNotFound(f"surviving neighbours of {i} span the whole space at the sample")
    w = basis[0]
    moved = p.with_row(i, w)
    in_variety = not check_orthogonality(moved, forest)
    zeros = {k for k in forest.vertices if moved.is_zero_row(k)}
    zero_set_ok = zeros == set(S) - {i}
    return DegenerationWitness(S, i, w, p, moved, in_variety, zero_set_ok)


def degeneration_test(forest: Forest, d: int, S: Iterable[int],
                      cfg: SampleConfig = SampleConfig()) -> bool:
    return degeneration_witness(forest, d, S, cfg).ok


# -- irredundancy -------------------------------------------------------------

@dataclass(frozen=True)
class PairCertificate:
    S: tuple
    S_other: tuple
    kind: str
    detail: tuple
    ok: bool

    def to_dict(self) -> dict:
        return {"S": list(self.S), "S_other": list(self.S_other), "kind": self.kind,
                "detail": list(self.detail), "ok": self.ok}


@dataclass(frozen=True)
class IrredundancyReport:
    pairs: tuple

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "pairs": [p.to_dict() for p in self.pairs]}


def irredundancy_test(forest: Forest, d: int, cfg: SampleConfig = SampleConfig(),
                      result=None) -> IrredundancyReport:
    """Certify that no admissible component lies in another.

    For each ordered pair (S, S') a point p of F(S) is shown to avoid V_{S'}:
    either a row of S' - S is nonzero at p, or (when S' is a proper subset of
    S) some i in S - S' has d surviving neighbours whose vectors are linearly
    independent at p, which points of V_{S'} cannot have.
    """
    result = result or enumerate_admissible(forest, d)
    sets = [tuple(c.S) for c in result.components]
    points = {S: sample_VS(forest, d, S, cfg, task=("irredundancy",)) for S in sets}
    certs = []
    for S in sets:
        p = points[S]
        wit = None
        for S2 in sets:
            if S2 == S:
                continue
            extra = sorted(set(S2) - set(S))
            if extra:
                nonzero = [k for k in extra if not p.is_zero_row(k)]
                certs.append(PairCertificate(S, S2, "zero-pattern", tuple(nonzero[:1]), bool(nonzero)))
                continue
            if wit is None:
                wit = admissibility_witness(forest, d, S)
            i = min(set(S) - set(S2))
            T = wit.get(i)
            ok = T is not None and p.rank(T) == d
            certs.append(PairCertificate(S, S2, "rank", (i,) + tuple(T or ()), ok))
    return IrredundancyReport(tuple(certs))


# -- vanishing ----------------------------------------------------------------

def point_values(point: RationalMatrix):
    rows = point.rows
    return lambda i, j: rows[i - 1][j - 1]


def vanishing_test(gens: GeneratorSet, forest: Forest, d: int, samples: int,
                   cfg: SampleConfig = SampleConfig()) -> bool:
    """Every generator of every level is exactly zero at ``samples`` points of U_G."""
    return not vanishing_failures(gens, forest, d, samples, cfg)


def vanishing_failures(gens: GeneratorSet, forest: Forest, d: int, samples: int,
                       cfg: SampleConfig = SampleConfig()) -> list:
    if gens.d != d or gens.n != forest.n:
        raise ShapeMismatch("generator set was built for a different (n, d)")
    bad = []
    polys = gens.generators  # cumulative: the last level contains all others
    for s in range(samples):
        p = sample_UG(forest, d, cfg, task=("vanishing", s))
        val = point_values(p)
        for k, P in enumerate(polys):
            if P.evaluate(val) != 0:
                bad.append((s, k))
    return bad
