"""Sparse multivariate polynomials over the integers in variables x_{i,j}.

A monomial is a tuple of ``((i, j), exponent)`` pairs sorted by variable,
with variables ordered x_{1,1} < x_{1,2} < ... < x_{n,d}. A polynomial maps
monomials to non-zero Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Mapping


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def _mono_key(m: tuple):
    """Graded-lex key: total degree, then exponents from the largest variable down."""
    return (sum(e for _, e in m), tuple(reversed(m)))


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        if terms:
            self._terms = {m: c for m, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, i: int, j: int) -> "Polynomial":
        return cls._raw({(((i, j), 1),): 1})

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls._raw({(): c} if c else {})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e for _, e in m) for m in self._terms}) <= 1

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def rows(self) -> set:
        return {v[0] for m in self._terms for v, _ in m}

    def row_degree(self, i: int) -> int:
        return max((sum(e for v, e in m if v[0] == i) for m in self._terms), default=0)

    def leading_term(self):
        """(monomial, coefficient) of the graded-lex largest monomial."""
        if not self._terms:
            return None
        m = max(self._terms, key=_mono_key)
        return m, self._terms[m]

    def sort_key(self):
        ordered = sorted(self._terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)
        return (self.degree(), len(ordered), tuple((_mono_key(m), c) for m, c in ordered))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- normal form ------------------------------------------------------
    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def canonical(self) -> "Polynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self._terms:
            return self
        g = self.content()
        if self.leading_term()[1] < 0:
            g = -g
        if g == 1:
            return self
        return Polynomial._raw({m: c // g for m, c in self._terms.items()})

    # -- evaluation and substitution --------------------------------------
    def evaluate(self, value: Callable[[int, int], Fraction] | Mapping) -> Fraction:
        """Evaluate at a point; ``value`` maps (i, j) to a number."""
        get = value.__getitem__ if isinstance(value, Mapping) else None
        total = Fraction(0)
        cache = {}
        for m, c in self._terms.items():
            t = Fraction(c)
            for v, e in m:
                x = cache.get(v)
                if x is None:
                    x = get(v) if get else value(*v)
                    cache[v] = x
                t *= x if e == 1 else x ** e
                if not t:
                    break
            total += t
        return total

    def substitute_row(self, i: int, images) -> "Polynomial":
        """Replace x_{i,1..d} by ``images[0..d-1]`` simultaneously."""
        if i not in self.rows():
            return self
        powers = {}

        def power(j, e):
            key = (j, e)
            if key not in powers:
                powers[key] = images[j - 1] ** e
            return powers[key]

        out = Polynomial()
        grouped = {}
        for m, c in self._terms.items():
            rest = tuple((v, e) for v, e in m if v[0] != i)
            row_part = tuple((v[1], e) for v, e in m if v[0] == i)
            grouped.setdefault(row_part, {})[rest] = c
        for row_part, rest_terms in grouped.items():
            factor = Polynomial.const(1)
            for j, e in row_part:
                factor = factor * power(j, e)
            out = out + factor * Polynomial._raw(rest_terms)
        return out

    # -- printing ---------------------------------------------------------
    def format(self, var: Callable[[int, int], str] | None = None) -> str:
        """Render with terms in descending graded-lex order."""
        if var is None:
            var = lambda i, j: f"x_{i}_{j}"
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items(), key=lambda t: _mono_key(t[0]), reverse=True):
            factors = [var(*v) if e == 1 else f"{var(*v)}^{e}" for v, e in m]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f"{sign}{body}"
        return out

    def __repr__(self):
        return f"Polynomial({self.format()})"

    def to_json_terms(self) -> list:
        ordered = sorted(self._terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)
        return [
            {"monomial": {f"{i},{j}": e for (i, j), e in m}, "coeff": str(c)}
            for m, c in ordered
        ]

    @classmethod
    def from_json_terms(cls, terms: list) -> "Polynomial":
        out = {}
        for t in terms:
            mono = []
            for key, e in t["monomial"].items():
                i, j = (int(x) for x in key.split(","))
                mono.append(((i, j), int(e)))
            out[tuple(sorted(mono))] = out.get(tuple(sorted(mono)), 0) + int(t["coeff"])
        return cls(out)
