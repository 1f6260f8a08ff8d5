"""Reference computations that share no code path with the package.

Each one takes a different route to a quantity the package computes:

* ``semigroup_delta``: delta of a branch as the number of gaps of its
  value semigroup (from characteristic exponents, no blow-ups).
* ``sturm_negative_definite``: eigenvalue signs from the characteristic
  polynomial and Sturm sequences (no leading minors).
* ``toric_chain``: resolution chain of the normalization of
  y = x1^e1 x2^e2 from the boundary of the convex hull of lattice points in
  the cone (no congruence solving, no continued fractions).
* ``fraction_det``: determinant by rational Gaussian elimination.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple


# -- plane branches -----------------------------------------------------------

def characteristic_exponents(m: int, exponents: Sequence[int]) -> List[int]:
    """[beta_0, beta_1, ...] of x = t^m, y = sum a_k t^k (k over ``exponents``)."""
    betas = [m]
    e = m
    for k in sorted(exponents):
        if e == 1:
            break
        if k % e:
            betas.append(k)
            e = gcd(e, k)
    if e != 1:
        raise ValueError("parametrization is not primitive up to the known terms")
    return betas


def semigroup_generators(betas: Sequence[int]) -> List[int]:
    gens = [betas[0]]
    if len(betas) == 1:
        return gens
    gens.append(betas[1])
    es = [betas[0]]
    for b in betas[1:]:
        es.append(gcd(es[-1], b))
    for i in range(1, len(betas) - 1):
        n_i = es[i - 1] // es[i]
        gens.append(n_i * gens[i] - betas[i] + betas[i + 1])
    return gens


def semigroup_gaps(gens: Sequence[int]) -> List[int]:
    if min(gens) == 1:
        return []
    limit = min(gens) * max(gens) + 1
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for v in range(1, limit + 1):
        reachable[v] = any(v >= g and reachable[v - g] for g in gens)
    return [v for v in range(limit + 1) if not reachable[v]]


def semigroup_delta(m: int, exponents: Sequence[int]) -> int:
    return len(semigroup_gaps(semigroup_generators(characteristic_exponents(m, exponents))))


# -- definiteness -------------------------------------------------------------

def char_poly(matrix: Sequence[Sequence[int]]) -> List[Fraction]:
    """Coefficients of det(t I - M), constant term first (Faddeev-LeVerrier)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return coeffs


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _rem(a, b):
    a = _trim(a)
    b = _trim(b)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _trim(a)
    return a


def _eval(p, x):
    v = Fraction(0)
    for c in reversed(p):
        v = v * x + c
    return v


def _sign_changes(seq, x) -> int:
    signs = [s for s in (_eval(p, x) for p in seq) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def sturm_negative_definite(matrix: Sequence[Sequence[int]]) -> bool:
    """All eigenvalues of a symmetric integer matrix are negative."""
    n = len(matrix)
    if n == 0:
        return True
    p = char_poly(matrix)
    if p[0] == 0:
        return False  # eigenvalue 0
    bound = 1 + max(sum(abs(x) for x in row) for row in matrix)
    seq = [p, _trim([k * c for k, c in enumerate(p)][1:])]
    while True:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return _sign_changes(seq, Fraction(0)) - _sign_changes(seq, Fraction(bound)) == 0


def fraction_det(matrix: Sequence[Sequence[int]]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] -= f * a[c][j]
    return det


# -- toric surfaces -----------------------------------------------------------

def toric_chain(e1: Fraction, e2: Fraction) -> Tuple[int, ...]:
    """Self-intersections (negated) of the minimal resolution of the
    normalization of y = x1^e1 x2^e2, listed from the x1 side.

    The weight lattice is N = {(u, v) in Z^2 : u*e1 + v*e2 in Z}; the
    exceptional curves are the lattice points on the compact boundary of the
    convex hull of N in the positive quadrant minus the origin.
    """
    e1, e2 = Fraction(e1), Fraction(e2)
    q1, q2 = e1.denominator, e2.denominator
    pts = []
    for u in range(q1 + 1):
        for v in range(q2 + 1):
            if (u, v) in ((0, 0), (q1, q2)):
                continue
            if (u == 0 and v != q2) or (u == q1 and v != 0):
                continue
            if (u * e1 + v * e2).denominator == 1:
                pts.append((u, v))
    pts.sort()

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    hull: List[Tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2 and cross(hull[-2], hull[-1], p) < 0:
            hull.pop()
        hull.append(p)
    # keep lattice points lying on hull edges
    boundary = [hull[0]]
    for a, b in zip(hull, hull[1:]):
        boundary.extend(p for p in pts if p not in boundary and a[0] < p[0] < b[0]
                        and cross(a, b, p) == 0)
        boundary.append(b)
    assert boundary[0] == (0, q2) and boundary[-1] == (q1, 0), boundary
    boundary.reverse()  # start at the ray of x1
    out = []
    for prev, cur, nxt in zip(boundary, boundary[1:], boundary[2:]):
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        b = Fraction(s[0], cur[0]) if cur[0] else Fraction(s[1], cur[1])
        assert b.denominator == 1 and (b * cur[0], b * cur[1]) == s
        out.append(int(b))
    return tuple(out)


# -- graph shapes -------------------------------------------------------------

def tree_arms(vertices: Sequence[str], edges: Sequence[Tuple[str, str]]) -> List[int]:
    """Arm lengths at the unique vertex of degree 3 of a star-shaped tree."""
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    centers = [v for v, ns in adj.items() if len(ns) == 3]
    assert len(centers) == 1 and all(len(ns) <= 3 for ns in adj.values())
    c = centers[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)
