"""Generators of LSS ideals and of the substitution closure I_G.

The closure starts from the edge quadrics and repeatedly replaces the d
variables of a row i by the signed maximal minors of the (d-1) x d matrix
of indeterminates on d-1 neighbours of i. Levels are cumulative, and the
stable ideal is only approximated up to a chosen depth: deciding
stabilization needs Groebner bases, which are left to the exported scripts.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DuplicateRow, Exploded, NotAdmissible, UnsupportedFormat, ValidationError
from .graph import Forest, induced_subgraph
from .decomposition import is_admissible
from .poly import Polynomial

DEFAULT_LEVEL_CAP = 10_000


def x(i: int, j: int) -> Polynomial:
    return Polynomial.var(i, j)


def edge_generators(forest: Forest, d: int) -> list:
    """One quadric sum_k x_{i,k} x_{j,k} per edge, in edge order."""
    if d < 1:
        raise ValidationError(f"d must be positive, got {d}")
    gens = []
    for i, j in forest.sorted_edges:
        f = Polynomial()
        for k in range(1, d + 1):
            f = f + x(i, k) * x(j, k)
        gens.append(f)
    return gens


def signed_minors(rows: Sequence[int], d: int) -> list:
    """The d signed maximal minors of the (d-1) x d matrix X_rows.

    Entry j (1-based) is (-1)^j times the determinant of X_rows with
    column j deleted. The result is a normal vector to the span of the rows.
    """
    rows = list(rows)
    if len(set(rows)) != len(rows):
        raise DuplicateRow(f"rows {rows} contain a repeat")
    if len(rows) != d - 1:
        raise ValidationError(f"need exactly d-1={d - 1} rows, got {len(rows)}")
    memo = {}

    def det(k, cols):
        # determinant of rows[k:] restricted to the columns in ``cols``
        if k == len(rows):
            return Polynomial.const(1)
        key = (k, cols)
        if key in memo:
            return memo[key]
        total = Polynomial()
        for p, c in enumerate(cols):
            sub = det(k + 1, cols[:p] + cols[p + 1:])
            term = x(rows[k], c) * sub
            total = total - term if p % 2 else total + term
        memo[key] = total
        return total

    allcols = tuple(range(1, d + 1))
    out = []
    for j in allcols:
        m = det(0, allcols[: j - 1] + allcols[j:])
        out.append(-m if j % 2 else m)
    return out


def substitute_row(P: Polynomial, i: int, minors: Sequence[Polynomial]) -> Polynomial:
    """Substitute x_{i,j} -> minors[j-1] for all j, then canonicalize."""
    return P.substitute_row(i, list(minors)).canonical()


def sort_polys(polys: Iterable[Polynomial]) -> tuple:
    return tuple(sorted(polys, key=lambda p: p.sort_key()))


@dataclass(frozen=True)
class GeneratorSet:
    """Cumulative levels X_0 <= X_1 <= ... <= X_depth of canonical generators."""

    n: int
    d: int
    levels: tuple

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def generators(self) -> tuple:
        return self.levels[-1]

    @property
    def counts(self) -> list:
        return [len(level) for level in self.levels]

    def new_at(self, j: int) -> tuple:
        if j == 0:
            return self.levels[0]
        prev = set(self.levels[j - 1])
        return tuple(p for p in self.levels[j] if p not in prev)

    def level_of(self, P: Polynomial):
        """Smallest level containing the canonical form of P, or None."""
        P = P.canonical()
        for j, level in enumerate(self.levels):
            if P in set(level):
                return j
        return None


def substitution_pairs(forest: Forest, d: int) -> list:
    """(i, T): vertex i of degree >= d-1 and T a (d-1)-subset of its neighbours."""
    pairs = []
    for i in sorted(forest.vertices):
        nb = sorted(forest.adjacency[i])
        if len(nb) >= d - 1:
            pairs.extend((i, T) for T in combinations(nb, d - 1))
    return pairs


def _expand(job):
    polys, pairs, d = job
    minors = {}
    out = []
    for P in polys:
        rows = P.rows()
        for i, T in pairs:
            if i not in rows:
                continue
            if T not in minors:
                minors[T] = signed_minors(T, d)
            Q = substitute_row(P, i, minors[T])
            if not Q.is_zero():
                out.append(Q)
    return out


def ideal_closure(forest: Forest, d: int, depth: int, cap: int = DEFAULT_LEVEL_CAP,
                  workers: int = 1) -> GeneratorSet:
    """Levels X_0..X_depth of the substitution closure.

    Each level applies one row substitution to each generator, for every
    substitution pair; composing levels realizes multi-row substitutions.
    Only generators new at the previous level need expanding, since the
    others were already expanded. Zero results are dropped.
    """
    if depth < 0:
        raise ValidationError(f"depth must be non-negative, got {depth}")
    current = {P.canonical() for P in edge_generators(forest, d)}
    levels = [sort_polys(current)]
    pairs = substitution_pairs(forest, d)
    frontier = levels[0]
    for _ in range(depth):
        if not pairs or not frontier:
            levels.append(levels[-1])
            frontier = ()
            continue
        if workers > 1 and len(frontier) > 1:
            chunks = [frontier[k::workers] for k in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = [q for part in pool.map(_expand, [(c, pairs, d) for c in chunks]) for q in part]
        else:
            results = _expand((frontier, pairs, d))
        new = {Q for Q in results if Q not in current}
        current |= new
        if len(current) > cap:
            raise Exploded(
                f"level {len(levels)} has {len(current)} generators, above the cap {cap}"
            )
        levels.append(sort_polys(current))
        frontier = sort_polys(new)
    return GeneratorSet(forest.n, d, tuple(levels))


@dataclass(frozen=True)
class ComponentIdeal:
    """Linear part (x_{i,j} : i in S) plus the closure of G - S.

    The defining ideal of the component is the linear part plus the *radical*
    of the closure; the radical is not computed here (``closure_up_to_radical``).
    """

    n: int
    d: int
    S: tuple
    linear: tuple
    closure: GeneratorSet
    closure_up_to_radical: bool = True


def component_ideal(forest: Forest, d: int, S: Iterable[int], depth: int,
                    cap: int = DEFAULT_LEVEL_CAP, workers: int = 1) -> ComponentIdeal:
    S = tuple(sorted(set(S)))
    if not is_admissible(forest, d, S):
        raise NotAdmissible(f"S={list(S)} is not admissible for d={d}")
    linear = tuple(x(i, j) for i in S for j in range(1, d + 1))
    rest = induced_subgraph(forest, forest.vertices - set(S))
    closure = ideal_closure(rest, d, depth, cap=cap, workers=workers)
    return ComponentIdeal(forest.n, d, S, linear, closure)


# -- export -------------------------------------------------------------------

FORMATS = ("m2", "singular", "json")


def _m2_var(i, j):
    return f"x_({i},{j})"


def _sing_var(i, j):
    return f"x({i})({j})"


def _m2_ideal(name, polys):
    if not polys:
        return f"{name} = ideal(0_R);\n"
    body = ",\n    ".join(p.format(_m2_var) for p in polys)
    return f"{name} = ideal(\n    {body}\n    );\n"


def _sing_ideal(name, polys):
    if not polys:
        return f"ideal {name} = 0;\n"
    body = ",\n    ".join(p.format(_sing_var) for p in polys)
    return f"ideal {name} =\n    {body};\n"


def _m2_ring(n, d):
    if n == 0:
        return "R = QQ;\n"
    return f"R = QQ[{_m2_var(1, 1)}..{_m2_var(n, d)}];\n"


def _sing_ring(n, d):
    if n == 0:
        return "ring R = 0, (x), dp;\n"
    return f"ring R = 0, (x(1..{n})(1..{d})), dp;\n"


def _gens_json(polys):
    return [p.to_json_terms() for p in polys]


def _component_json(c: ComponentIdeal):
    return {
        "S": list(c.S),
        "linear": _gens_json(c.linear),
        "closure_depth": c.closure.depth,
        "closure_level_counts": c.closure.counts,
        "closure": _gens_json(c.closure.generators),
        "closure_up_to_radical": c.closure_up_to_radical,
    }


def export(obj, fmt: str) -> str:
    """Serialize a GeneratorSet, a ComponentIdeal, or a list of ComponentIdeals.

    ``m2`` and ``singular`` produce self-contained scripts over QQ[x_{i,j}];
    ``json`` produces the documented JSON layout. Output is byte-deterministic.
    """
    fmt = fmt.lower()
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if isinstance(obj, GeneratorSet):
        return _export_generators(obj, fmt)
    if isinstance(obj, ComponentIdeal):
        return _export_components([obj], fmt, single=True)
    comps = list(obj)
    if not comps or not all(isinstance(c, ComponentIdeal) for c in comps):
        raise ValidationError("export expects a GeneratorSet, a ComponentIdeal or a list of them")
    return _export_components(comps, fmt, single=False)


def _export_generators(g: GeneratorSet, fmt):
    gens = g.generators
    if fmt == "json":
        doc = {"vars": {"n": g.n, "d": g.d}, "depth": g.depth, "level_counts": g.counts,
               "generators": _gens_json(gens)}
        return json.dumps(doc, sort_keys=True) + "\n"
    if fmt == "m2":
        head = f"-- substitution closure, n={g.n} d={g.d} depth={g.depth}, level sizes {g.counts}\n"
        return head + _m2_ring(g.n, g.d) + _m2_ideal("I", gens)
    head = f"// substitution closure, n={g.n} d={g.d} depth={g.depth}, level sizes {g.counts}\n"
    return head + _sing_ring(g.n, g.d) + _sing_ideal("I", gens)


def _export_components(comps, fmt, single):
    n, d = comps[0].n, comps[0].d
    if fmt == "json":
        doc = {"vars": {"n": n, "d": d}}
        if single:
            doc.update(_component_json(comps[0]))
        else:
            doc["components"] = [_component_json(c) for c in comps]
        return json.dumps(doc, sort_keys=True) + "\n"

    m2 = fmt == "m2"
    c_ = "--" if m2 else "//"
    out = [f"{c_} component ideals, n={n} d={d}; each is (x_(i,j) : i in S) + radical(closure of G - S)\n"]
    if not m2:
        out.append('LIB "primdec.lib";\n')
    out.append(_m2_ring(n, d) if m2 else _sing_ring(n, d))
    names = []
    for k, c in enumerate(comps, start=1):
        S = "{" + ",".join(map(str, c.S)) + "}"
        out.append(f"{c_} S = {S}, closure depth {c.closure.depth}, level sizes {c.closure.counts}\n")
        if m2:
            out.append(_m2_ideal(f"lin{k}", c.linear))
            out.append(_m2_ideal(f"J{k}", c.closure.generators))
            out.append(f"P{k} = lin{k} + radical J{k};\n")
        else:
            out.append(_sing_ideal(f"lin{k}", c.linear))
            out.append(_sing_ideal(f"J{k}", c.closure.generators))
            out.append(f"ideal P{k} = lin{k} + radical(J{k});\n")
        names.append(f"P{k}")
    if not single:
        joined = ", ".join(names)
        if m2:
            out.append(f"-- the LSS ideal should equal intersect({joined}) once the closures have stabilized\n")
        else:
            out.append(f"// the LSS ideal should equal intersect({joined}) once the closures have stabilized\n")
    return "".join(out)
