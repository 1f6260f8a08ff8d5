"""Newton-Puiseux branches of plane curve germs at the origin, over Q.

A branch is stored as ``x = t^m, y = sum a_k t^k``.  The single exception is
the line ``x = 0`` (which has no such parametrization); it is a branch with
``vertical=True`` standing for ``x = 0, y = t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .arith import rational_root
from .errors import (
    InconsistentInput,
    IrrationalCoefficient,
    NotSquarefree,
    NotThroughOrigin,
    TruncationInsufficient,
)
from .poly import (
    Poly,
    is_squarefree,
    lower_boundary,
    parse_poly,
    rational_roots,
    upoly_gcd,
    upoly_to_text,
)
from .series import INF, Series

DEFAULT_ORDER = 32
DEFAULT_MAX_ORDER = 512


@dataclass(frozen=True)
class PuiseuxBranch:
    m: int
    coeffs: Tuple[Tuple[int, Fraction], ...] = ()
    trunc: Optional[int] = None  # None: the expansion is exact
    vertical: bool = False
    surrogate: bool = False  # coefficients stand in for irrational ones

    def __post_init__(self):
        if self.m < 1:
            raise InconsistentInput(f"branch needs m >= 1, got {self.m}")
        clean = tuple(sorted((int(k), Fraction(c)) for k, c in self.coeffs if c))
        if any(k < 1 for k, _ in clean):
            raise NotThroughOrigin("branch coefficients must have positive exponents")
        if self.trunc is not None:
            clean = tuple((k, c) for k, c in clean if k < self.trunc)
        object.__setattr__(self, "coeffs", clean)
        if self.vertical and (self.m != 1 or clean):
            raise InconsistentInput("a vertical branch is exactly the line x = 0")
        g = self.m
        for k, _ in clean:
            g = gcd(g, k)
        if g != 1:
            raise InconsistentInput(
                f"parametrization is not primitive: gcd(m, exponents) = {g}")

    @classmethod
    def from_terms(cls, m: int, terms: Dict[int, Fraction], trunc: Optional[int] = None,
                   surrogate: bool = False):
        return cls(m, tuple(terms.items()), trunc, False, surrogate)

    @property
    def exact(self) -> bool:
        return self.trunc is None

    @property
    def leading_exponent(self):
        """n with a_n the first nonzero coefficient (INF for the x-axis)."""
        if self.vertical:
            return 1
        if self.coeffs:
            return self.coeffs[0][0]
        if self.exact:
            return INF
        raise TruncationInsufficient("no nonzero coefficient known")

    @property
    def multiplicity(self) -> int:
        if self.vertical:
            return 1
        n = self.leading_exponent
        return self.m if n == INF else min(self.m, n)

    def x_series(self) -> Series:
        return Series() if self.vertical else Series.monomial(self.m)

    def y_series(self) -> Series:
        if self.vertical:
            return Series.monomial(1)
        return Series.from_dict(dict(self.coeffs), self.trunc)

    def coefficient(self, k: int) -> Fraction:
        if self.trunc is not None and k >= self.trunc:
            raise TruncationInsufficient(f"a_{k} unknown (truncated at {self.trunc})")
        return dict(self.coeffs).get(k, Fraction(0))

    def to_json(self) -> dict:
        if self.vertical:
            return {"m": 1, "coeffs": {}, "trunc": 0, "exact": True, "vertical": True}
        trunc = self.trunc if self.trunc is not None else (self.coeffs[-1][0] + 1 if self.coeffs else 1)
        data = {
            "m": self.m,
            "coeffs": {str(k): str(c) for k, c in self.coeffs},
            "trunc": trunc,
            "exact": self.exact,
        }
        if self.surrogate:
            data["surrogate"] = True
        return data

    @classmethod
    def from_json(cls, data: dict) -> "PuiseuxBranch":
        if data.get("vertical"):
            return cls(1, (), None, True)
        coeffs = tuple((int(k), Fraction(v)) for k, v in data.get("coeffs", {}).items())
        exact = data.get("exact", False)
        return cls(int(data["m"]), coeffs, None if exact else int(data["trunc"]),
                   False, bool(data.get("surrogate", False)))

    def __str__(self):
        if self.vertical:
            return "(0, t)"
        ys = " + ".join(f"{c}*t^{k}" for k, c in self.coeffs) or "0"
        tail = "" if self.exact else f" + O(t^{self.trunc})"
        return f"(t^{self.m}, {ys}{tail})"


# -----------------------------------------------------------------------------
# Newton-Puiseux iteration

def _substitute(f: Poly, q: int, p: int, c: Fraction) -> Poly:
    """f(s^q, s^p (c + y)) / s^shift for the edge shift."""
    out: Dict[Tuple[int, int], Fraction] = {}
    for (i, j), a in f.terms.items():
        base = i * q + j * p
        cpow = [Fraction(1)]
        for _ in range(j):
            cpow.append(cpow[-1] * c)
        for l in range(j + 1):
            mon = (base, l)
            out[mon] = out.get(mon, 0) + a * comb(j, l) * cpow[j - l]
    g = Poly(out, f.vars)
    shift = min(m[0] for m in g.terms)
    return Poly({(i - shift, j): v for (i, j), v in g.terms.items()}, f.vars)


def _y_coefficient_series(f: Poly, prec: Optional[int]) -> List[Series]:
    """Coefficients of y^j in f as series in x (exact when prec is None)."""
    deg = max(m[1] for m in f.terms)
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(deg + 1)]
    for (i, j), a in f.terms.items():
        if prec is None or i < prec:
            rows[j][i] = a
    return [Series.from_dict(r, prec) for r in rows]


def _horner(coeffs: List[Series], y: Series) -> Series:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * y + c
    return acc


def _implicit_root(f: Poly, prec: int) -> Tuple[Series, bool]:
    """Power series root y(x) of f(x, y) = 0 with y(0) = 0, assuming f_y(0,0) != 0.

    Returns the root modulo x^prec and whether it is an exact polynomial root.
    """
    fy = f.diff("y")
    y = Series((), 1)
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        yk = Series(y.coeffs, k)
        val = _horner(_y_coefficient_series(f, k), yk)
        der = _horner(_y_coefficient_series(fy, k), yk)
        y = (yk - val * der.inverse(k)).truncate(k)
    y = Series(y.coeffs, prec)
    full = _horner(_y_coefficient_series(f, None), Series(y.coeffs))
    return y, full.is_exact_zero()


def _edges(f: Poly):
    """Edges of the local Newton polygon with a positive drop in y."""
    verts = lower_boundary(f.terms.keys())
    for a, b in zip(verts, verts[1:]):
        if a[1] > b[1]:
            yield a, b


def _derivative(p: Sequence[Fraction]) -> List[Fraction]:
    return [k * a for k, a in enumerate(p)][1:]


def _surrogates(phi_roots, count: int, q: int) -> List[Fraction]:
    """``count`` integers k with k^q distinct from each other and from the known roots."""
    out, k = [], 1
    while len(out) < count:
        if Fraction(k ** q) not in phi_roots:
            out.append(Fraction(k))
        k += 1
    return out


def _newton_puiseux(f: Poly, m: int, prefix: Dict[int, Fraction], e: int,
                    order: int, conjugates: Optional[list] = None) -> Iterator[PuiseuxBranch]:
    """Branches of y = prefix(t) + t^e * y'(t), x = t^m, where f(t, y') = 0 locally.

    With ``conjugates`` (a list) an irrational but simple root of an edge
    polynomial does not abort the expansion: it yields a surrogate branch
    ``prefix + k t^e'`` with a fresh rational k.  Such a branch has the same
    characteristic exponents and the same contacts with all other branches as
    the true one, since a simple root adds no further characteristic
    exponent.  Irreducible factors of degree >= 2 (several conjugate branches
    separating at an irrational point) are appended to ``conjugates``.
    """
    while True:
        jmin = min(j for _, j in f.terms)
        if jmin == 0:
            break
        if jmin > 1:
            raise NotSquarefree("repeated branch found during Newton-Puiseux expansion")
        # y' = 0 is an exact root
        yield PuiseuxBranch.from_terms(m, prefix, None)
        f = Poly({(i, j - 1): a for (i, j), a in f.terms.items()}, f.vars)
        if f.constant_term() != 0:
            return

    d = min(j for i, j in f.terms if i == 0)
    if d == 1:
        prec = max(order - e, 1)
        root, exact = _implicit_root(f, prec)
        terms = dict(prefix)
        for k, c in root.terms().items():
            terms[e + k] = terms.get(e + k, 0) + c
        yield PuiseuxBranch.from_terms(m, terms, None if exact else e + prec)
        return

    for a, b in _edges(f):
        gamma = Fraction(b[0] - a[0], a[1] - b[1])
        p, q = gamma.numerator, gamma.denominator
        shift = a[0] * q + a[1] * p
        edge = {j: v for (i, j), v in f.terms.items() if i * q + j * p == shift}
        jb = b[1]
        phi = [Fraction(0)] * ((a[1] - jb) // q + 1)
        for j, v in edge.items():
            phi[(j - jb) // q] = v
        roots, rest = rational_roots(phi)
        new_e = e * q + p
        irrational = []
        if len(rest) > 1:
            if conjugates is None or len(upoly_gcd(rest, _derivative(rest))) > 1:
                raise IrrationalCoefficient(
                    f"Newton-Puiseux step needs a root of {upoly_to_text(rest)} "
                    f"(w = c^{q}), which has no rational roots", rest)
            conjugates.append(rest)
            irrational.append(len(rest) - 1)
        for w in sorted(roots):
            if rational_root(w, q) is None:
                poly = [-w] + [Fraction(0)] * (q - 1) + [Fraction(1)]
                if conjugates is None or roots[w] > 1:
                    raise IrrationalCoefficient(
                        f"coefficient c with c^{q} = {w} is not rational", poly)
                irrational.append(1)
        if irrational:
            taken = set(roots)
            for k in _surrogates(taken, sum(irrational), q):
                terms = {j * q: v for j, v in prefix.items()}
                terms[new_e] = k
                yield PuiseuxBranch.from_terms(m * q, terms, None, surrogate=True)
        for w in sorted(roots):
            c = rational_root(w, q)
            if c is None:
                continue
            g = _substitute(f, q, p, c)
            new_prefix = {k * q: v for k, v in prefix.items()}
            new_prefix[new_e] = c
            yield from _newton_puiseux(g, m * q, new_prefix, new_e, order, conjugates)


def puiseux_branches(f: Poly, order: int = DEFAULT_ORDER,
                     check_squarefree: bool = True,
                     conjugates: Optional[list] = None) -> List[PuiseuxBranch]:
    """All branches of f = 0 at the origin, each known to at least t^order.

    Irrational coefficients raise IrrationalCoefficient unless ``conjugates``
    is given; see :func:`_newton_puiseux`.
    """
    if f.is_zero():
        raise NotSquarefree("the zero polynomial does not define a reduced curve")
    if f.constant_term() != 0:
        raise NotThroughOrigin(f"{f} does not vanish at the origin")
    if check_squarefree and not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")
    branches = []
    kx = min(i for i, _ in f.terms)
    if kx > 1:
        raise NotSquarefree("x^2 divides f")
    if kx == 1:
        branches.append(PuiseuxBranch(1, (), None, True))
        f = Poly({(i - 1, j): a for (i, j), a in f.terms.items()}, f.vars)
        if f.constant_term() != 0:
            return branches
    branches.extend(_newton_puiseux(f, 1, {}, 0, order, conjugates))
    return branches


# -----------------------------------------------------------------------------
# germs

class CurveGerm:
    """A reduced plane curve germ at the origin, by equation and/or branches."""

    def __init__(self, poly: Optional[Poly] = None,
                 branches: Optional[Sequence[PuiseuxBranch]] = None,
                 name: Optional[str] = None):
        if poly is None and branches is None:
            raise InconsistentInput("a germ needs a polynomial or a list of branches")
        if poly is not None:
            if poly.constant_term() != 0:
                raise NotThroughOrigin(f"{poly} does not vanish at the origin")
            if not is_squarefree(poly):
                raise NotSquarefree(f"{poly} is not squarefree")
        self.poly = poly
        self._given = tuple(branches) if branches is not None else None
        self._cache: Dict[tuple, Tuple[PuiseuxBranch, ...]] = {}
        self._conjugates: Dict[tuple, tuple] = {}
        self.name = name or (poly.to_text() if poly is not None else "branches")

    @classmethod
    def from_text(cls, text: str) -> "CurveGerm":
        return cls(parse_poly(text))

    @property
    def expandable(self) -> bool:
        return self._given is None

    def branches(self, order: int = DEFAULT_ORDER,
                 surrogate: bool = False) -> Tuple[PuiseuxBranch, ...]:
        """Branches to order ``order``; with ``surrogate`` irrational simple roots
        become flagged surrogate branches (see :meth:`conjugate_factors`)."""
        if self._given is not None:
            return self._given
        key = (order, surrogate)
        if key not in self._cache:
            conj = [] if surrogate else None
            self._cache[key] = tuple(puiseux_branches(self.poly, order, False, conj))
            self._conjugates[key] = tuple(tuple(c) for c in conj or ())
        return self._cache[key]

    def conjugate_factors(self, order: int = DEFAULT_ORDER) -> Tuple[Tuple[Fraction, ...], ...]:
        """Irreducible edge polynomials whose roots give several conjugate branches."""
        self.branches(order, True)
        return self._conjugates.get((order, True), ())

    def __repr__(self):
        return f"CurveGerm({self.name!r})"


def max_order_default() -> int:
    import os
    value = os.environ.get("SINGRES_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


def adaptive(germ: CurveGerm, compute, order: int = DEFAULT_ORDER,
             max_order: Optional[int] = None, surrogate: bool = False):
    """Run compute(branches), doubling the truncation order on TruncationInsufficient."""
    max_order = max_order or max_order_default()
    while True:
        try:
            return compute(germ.branches(order, surrogate))
        except TruncationInsufficient:
            if not germ.expandable or order * 2 > max_order:
                raise
            order *= 2


# -----------------------------------------------------------------------------
# intersection multiplicities

GermLike = Union[PuiseuxBranch, CurveGerm]


def _unit_root_value(r: int, j: int, n: int):
    """zeta^(r*j) for zeta = exp(2 pi i / n): 1, -1 or None (non-real)."""
    e = (r * j) % n
    if e == 0:
        return 1
    if 2 * e == n:
        return -1
    return None


def branch_intersection(a: PuiseuxBranch, b: PuiseuxBranch):
    """I(a, b) from the two parametrizations (conjugate-product formula)."""
    if a.vertical and b.vertical:
        return INF
    if b.vertical:
        return a.m
    if a.vertical:
        return b.m
    ma, mb = a.m, b.m
    ca, cb = dict(a.coeffs), dict(b.coeffs)
    bound = min(INF if a.trunc is None else a.trunc * mb,
                INF if b.trunc is None else b.trunc * ma)
    positions = sorted({k * mb for k in ca} | {k * ma for k in cb})
    total = 0
    for r in range(mb):
        order = None
        for e in positions:
            if e >= bound:
                break
            av = ca.get(e // mb, Fraction(0)) if e % mb == 0 else Fraction(0)
            bv = cb.get(e // ma, Fraction(0)) if e % ma == 0 else Fraction(0)
            if bv == 0:
                same = av == 0
            else:
                z = _unit_root_value(r, e // ma, mb)
                same = z is not None and av == bv * z
            if not same:
                order = e
                break
        if order is None:
            if bound == INF:
                return INF
            raise TruncationInsufficient(
                f"branches agree up to the known precision (t^{bound} in the common parameter)")
        total += order
    if total % mb:
        raise InconsistentInput("non-integral intersection number; branches are not primitive")
    return total // mb


def branch_poly_order(branch: PuiseuxBranch, f: Poly):
    """ord_t f(x(t), y(t)); INF if the branch lies on f = 0."""
    value = f.evaluate({"x": branch.x_series(), "y": branch.y_series()})
    if not isinstance(value, Series):
        value = Series([value])
    if value.low() == value._prec():
        if value.exact:
            return INF
        raise TruncationInsufficient(
            f"f vanishes on the branch up to the known precision t^{value.prec}")
    return value.low()


def intersection_multiplicity(a: GermLike, b: GermLike, order: int = DEFAULT_ORDER,
                              max_order: Optional[int] = None):
    """Local intersection number at the origin; INF when a common branch exists."""
    if isinstance(a, PuiseuxBranch) and isinstance(b, PuiseuxBranch):
        return branch_intersection(a, b)
    if isinstance(a, PuiseuxBranch):
        a, b = b, a
    # a is a germ from here on
    if isinstance(b, PuiseuxBranch):
        if a.poly is not None:
            return branch_poly_order(b, a.poly)
        return sum_inf(branch_intersection(x, b) for x in a.branches())
    if b.poly is not None:
        try:
            return adaptive(a, lambda bs: sum_inf(branch_poly_order(x, b.poly) for x in bs),
                            order, max_order)
        except IrrationalCoefficient:
            # I is symmetric: parametrize the other germ if it has rational branches
            if a.poly is None or not b.expandable:
                raise
            return adaptive(b, lambda bs: sum_inf(branch_poly_order(x, a.poly) for x in bs),
                            order, max_order)
    if a.poly is not None:
        return intersection_multiplicity(b, a, order, max_order)

    def compute(bs):
        return sum_inf(intersection_multiplicity(b, x) for x in bs)
    return adaptive(a, compute, order, max_order)


def sum_inf(values) -> Union[int, float]:
    total = 0
    for v in values:
        if v == INF:
            return INF
        total += v
    return total


# -----------------------------------------------------------------------------
# invariants computed through blow-ups (see curveres)

def multiplicity_sequence(branch: PuiseuxBranch) -> List[int]:
    """Multiplicities at the centers of the branch's minimal embedded resolution."""
    from .curveres import embedded_resolution
    record = embedded_resolution(CurveGerm(branches=[branch]))
    # a smooth branch needs no blow-up; its sequence is just its multiplicity
    return record.multiplicity_sequences()[0] or [1]


def delta_invariant(germ: CurveGerm, order: int = DEFAULT_ORDER,
                    max_order: Optional[int] = None) -> int:
    """Sum of m_p (m_p - 1) / 2 over all centers of the minimal embedded resolution."""
    from .curveres import embedded_resolution
    record = embedded_resolution(germ, order=order, max_order=max_order)
    return sum(node.multiplicity * (node.multiplicity - 1) // 2 for node in record.tree)


def genus_of_plane_curve(d: int, germs: Sequence[CurveGerm]) -> int:
    """Genus of the normalization of a degree-d plane curve with the given singular germs."""
    if d < 1:
        raise InconsistentInput(f"degree must be positive, got {d}")
    g = (d - 1) * (d - 2) // 2 - sum(delta_invariant(germ) for germ in germs)
    if g < 0:
        raise InconsistentInput(f"negative genus {g}: germs cannot all lie on a degree-{d} curve")
    return g
