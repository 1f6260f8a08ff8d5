"""Hirzebruch-Jung (cyclic quotient) surface singularities.

A normal germ over which ``y = x1^(p1/q1) x2^(p2/q2)`` is finite is toric; its
normalization is the cyclic quotient of type (q1', k1') computed by
:func:`lemma_reduce`, whose minimal resolution is a chain of rational curves
with self-intersections ``-b_i`` where ``q1'/k1' = [b_1, ..., b_r]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

from .arith import hj_expand, solve_congruence
from .errors import NonCoprime, RangeError
from .graph import Arrow, DualGraph, Vertex


@dataclass(frozen=True)
class CyclicQuotient:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k < max(self.n, 1):
            raise RangeError(f"need n >= 1 and 0 <= k < n, got ({self.n}, {self.k})")
        if self.n > 1 and gcd(self.n, self.k) != 1:
            raise NonCoprime(f"gcd({self.n}, {self.k}) != 1")

    @property
    def smooth(self) -> bool:
        return self.n == 1

    def chain(self):
        return hj_expand(self.n, self.k) if self.n > 1 else ()


@dataclass(frozen=True)
class MonomialGerm:
    e1: Fraction
    e2: Fraction

    def __init__(self, e1, e2):
        e1, e2 = Fraction(e1), Fraction(e2)
        if e1 <= 0 or e2 <= 0:
            raise RangeError(f"exponents must be positive, got {e1}, {e2}")
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)

    @property
    def p1(self): return self.e1.numerator

    @property
    def q1(self): return self.e1.denominator

    @property
    def p2(self): return self.e2.numerator

    @property
    def q2(self): return self.e2.denominator

    def swapped(self) -> "MonomialGerm":
        return MonomialGerm(self.e2, self.e1)

    def __str__(self):
        return f"x1^({self.e1}) * x2^({self.e2})"


class LemmaReduction(NamedTuple):
    q1p: int
    k1p: int
    quotient: CyclicQuotient
    reduced: Optional[MonomialGerm]   # None when the normalization is smooth
    d: int
    j1: int
    k1: int


def lemma_reduce(g: MonomialGerm) -> LemmaReduction:
    """Reduce to the germ x1^(1/q1') x2^((q1'-k1')/q1') with the same normalization."""
    d = gcd(g.q1, g.q2)
    j1 = g.q1 // d
    k1 = solve_congruence(g.p1, j1 * g.p2, g.q1)
    h = gcd(g.q1, k1)
    q1p, k1p = g.q1 // h, k1 // h
    if q1p == 1:
        return LemmaReduction(1, 0, CyclicQuotient(1, 0), None, d, j1, k1)
    reduced = MonomialGerm(Fraction(1, q1p), Fraction(q1p - k1p, q1p))
    return LemmaReduction(q1p, k1p, CyclicQuotient(q1p, k1p), reduced, d, j1, k1)


def _chain_graph(chain, prefix: str = "C") -> DualGraph:
    ids = [f"{prefix}{i + 1}" for i in range(len(chain))]
    verts = [Vertex(v, -b, 0) for v, b in zip(ids, chain)]
    edges = [(ids[i], ids[i + 1], 1) for i in range(len(ids) - 1)]
    return DualGraph(verts, edges)


def cyclic_quotient_resolution(c: CyclicQuotient) -> DualGraph:
    """Minimal resolution graph: a chain of smooth rational curves."""
    return _chain_graph(c.chain())


def figure7_graph(g: MonomialGerm) -> DualGraph:
    """Resolution chain with the strict transforms of {x1=0} and {x2=0} as arrows.

    The arrow ``x1`` sits on the first chain vertex and ``x2`` on the last; the
    order matters since the reduction is not symmetric in x1, x2.
    """
    red = lemma_reduce(g)
    chain = _chain_graph(red.quotient.chain())
    ids = chain.ids
    if not ids:
        return DualGraph(arrows=[Arrow(None, "x1"), Arrow(None, "x2")])
    return chain.copy(arrows=[Arrow(ids[0], "x1"), Arrow(ids[-1], "x2")])
