"""Resolution of surface germs z^n + f(x, y) = 0 by the Jung method.

The projection (x, y, z) -> (x, y) is branched over f = 0.  After an
embedded resolution of f = 0 the pulled-back germ is quasi-ordinary: near a
point of E_v alone it is z^n = x^a, near a double point z^n = x1^a x2^b.  Its
normalization is then

* over E_v: a cyclic cover of E_v with gcd(n, a) local sheets, split into
  gcd(n, a, all incident multiplicities) connected components;
* over a double point: gcd(n, a, b) Hirzebruch-Jung points, each resolved by
  the chain of ``figure7_graph(a/n, b/n)``.

The multiplicities of z along the new curves follow from the balance
relations, and those fix the unknown self-intersections of the curves
covering the E_v.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .curveres import ResolutionRecord, embedded_resolution
from .errors import (
    InternalInconsistency,
    NotSquarefree,
    NotThroughOrigin,
    RangeError,
    UnsupportedCovering,
    ZeroPolynomial,
)
from .graph import (
    Arrow,
    DualGraph,
    Vertex,
    blow_down_minimize,
    check_balance,
    intersection_matrix,
    is_negative_definite,
    solve_linear,
)
from .hj import MonomialGerm, figure7_graph
from .poly import Poly, discriminant_wrt, is_squarefree, parse_poly
from .puiseux import DEFAULT_ORDER, CurveGerm


@dataclass(frozen=True)
class SurfaceGerm:
    n: int
    f: Poly

    def __post_init__(self):
        if self.n < 1:
            raise RangeError(f"cover degree must be positive, got {self.n}")
        if self.f.is_zero():
            raise ZeroPolynomial("f must be nonzero")
        if self.f.constant_term() != 0:
            raise NotThroughOrigin("f(0,0) must vanish")
        if not is_squarefree(self.f):
            raise NotSquarefree(f"{self.f} is not squarefree")

    @classmethod
    def from_text(cls, n: int, text: str) -> "SurfaceGerm":
        return cls(int(n), parse_poly(text))

    def equation(self) -> Poly:
        f = self.f.with_vars(("x", "y", "z"))
        return Poly.variable("z", ("x", "y", "z")) ** self.n + f


@dataclass(frozen=True)
class QuasiOrdinaryPoint:
    """Point of the base total transform where two curves meet.

    ``point`` names the two curves (vertex ids or branch labels); ``a`` and
    ``b`` are their multiplicities in the total transform of f.
    """
    point: Tuple[str, str]
    a: int
    b: int

    def exponents(self, n: int) -> MonomialGerm:
        return MonomialGerm(Fraction(self.a, n), Fraction(self.b, n))


@dataclass(frozen=True)
class CoveringDatum:
    vertex: str
    a: int
    sheets: int          # gcd(n, a): points over a general point of E_v
    components: int
    ramification: int    # n / sheets
    genus: int


def _origin_is_normal_crossing(record: ResolutionRecord) -> bool:
    if not record.tree:
        return True
    return (len(record.tree) == 1 and record.n_branches == 2
            and record.tree[0].multiplicity == 2)


def local_quasi_ordinary_data(record: ResolutionRecord, n: int) -> List[QuasiOrdinaryPoint]:
    """Double points of the total transform of f with the multiplicities meeting there."""
    g = record.graph
    mult = {v.id: v.dec["f_mult"] for v in g.vertices.values()}
    out = [QuasiOrdinaryPoint((a, b), mult[a], mult[b])
           for (a, b), c in sorted(g.edges.items()) for _ in range(c)]
    out += [QuasiOrdinaryPoint((arr.at, arr.label), mult[arr.at], 1)
            for arr in g.arrows if arr.at is not None]
    free = [arr.label for arr in g.arrows if arr.at is None]
    if len(free) == 2:
        out.append(QuasiOrdinaryPoint((free[0], free[1]), 1, 1))
    return out


def cover_of_exceptional(vertex: str, n: int, a: int, incident: Sequence[int],
                         base_genus: int = 0) -> CoveringDatum:
    """Normalized cyclic cover of degree n of E_v, where f has order a along E_v
    and order ``incident[j]`` along the j-th curve meeting E_v."""
    sheets = gcd(n, a)
    comps = sheets
    for b in incident:
        comps = gcd(comps, b)
    euler = sheets * (2 - 2 * base_genus - len(incident)) + sum(gcd(sheets, b) for b in incident)
    if euler % comps:
        raise UnsupportedCovering(f"cover of {vertex} does not split into equal components")
    twice = 2 - euler // comps
    if twice < 0 or twice % 2:
        raise UnsupportedCovering(f"cover of {vertex} has Euler characteristic {euler // comps}")
    return CoveringDatum(vertex, a, sheets, comps, n // sheets, twice // 2)


def _chain_multiplicities(selfs: Sequence[int], left: int, right: int) -> List[int]:
    """z-orders along a chain from the balance relations with fixed end values."""
    r = len(selfs)
    if r == 0:
        return []
    matrix = [[Fraction(0)] * r for _ in range(r)]
    rhs = [Fraction(0)] * r
    for i, s in enumerate(selfs):
        matrix[i][i] = Fraction(s)
        if i > 0:
            matrix[i][i - 1] = Fraction(1)
        if i < r - 1:
            matrix[i][i + 1] = Fraction(1)
    rhs[0] -= left
    rhs[-1] -= right
    sol = solve_linear(matrix, rhs)
    if any(c.denominator != 1 or c <= 0 for c in sol):
        raise InternalInconsistency(f"non-integral multiplicities {sol} on an inserted chain")
    return [int(c) for c in sol]


@dataclass
class JungResult:
    germ: SurfaceGerm
    discriminant: Poly
    record: ResolutionRecord
    data: List[QuasiOrdinaryPoint]
    coverings: List[CoveringDatum]
    graph: DualGraph
    minimized: DualGraph = field(default=None)

    def to_json(self) -> dict:
        return {"n": self.germ.n, "f": self.germ.f.to_text(),
                "graph": self.graph.to_json(), "minimized": self.minimized.to_json()}


def _check_discriminant(s: SurfaceGerm) -> Poly:
    disc = discriminant_wrt(s.equation(), "z")
    expected = (s.f ** (s.n - 1)).normalized() if s.n > 1 else Poly.constant(1)
    if disc.with_vars(("x", "y")) != expected.with_vars(("x", "y")):
        raise InternalInconsistency(f"discriminant {disc} is not a power of f")
    return disc


def jung_pipeline(s: SurfaceGerm, order: int = DEFAULT_ORDER,
                  max_order: Optional[int] = None) -> JungResult:
    disc = _check_discriminant(s)
    n = s.n
    record = embedded_resolution(CurveGerm(poly=s.f), order, max_order, allow_conjugates=True)
    if _origin_is_normal_crossing(record):
        # the branch locus already has normal crossings: no base blow-up needed
        labels = [arr.label for arr in record.graph.arrows]
        base = DualGraph(arrows=[Arrow(None, lab) for lab in labels])
        record_used = ResolutionRecord([], base, len(labels), record.branches, record.name)
    else:
        record_used = record
    base = record_used.graph
    data = local_quasi_ordinary_data(record_used, n)

    mult = {v.id: v.dec["f_mult"] for v in base.vertices.values()}
    incident: Dict[str, List[int]] = {v: [] for v in mult}
    for q in data:
        x, y = q.point
        if x in incident:
            incident[x].append(q.b)
        if y in incident:
            incident[y].append(q.a)
    coverings = [cover_of_exceptional(v, n, mult[v], incident[v], base.vertices[v].genus)
                 for v in mult]
    cov = {c.vertex: c for c in coverings}

    def comp_id(v: str, j: int) -> str:
        c = cov[v].components
        return v if c == 1 else f"{v}.{j % c}"

    z_mult: Dict[str, int] = {}
    genus: Dict[str, int] = {}
    order_ids: List[str] = []
    for c in coverings:
        for j in range(c.components):
            vid = comp_id(c.vertex, j)
            z_mult[vid] = c.a // c.sheets
            genus[vid] = c.genus
            order_ids.append(vid)
    chain_self: Dict[str, int] = {}
    edges: List[Tuple[str, str]] = []
    arrows: List[Tuple[str, Optional[str]]] = []  # (label, attached vertex)

    for q in data:
        x, y = q.point
        fig = figure7_graph(q.exponents(n))
        path = fig.path_order()
        if path and fig.arrows[0].at != path[0]:
            path.reverse()
        selfs = [fig.vertices[v].self_int for v in path]
        points = gcd(n, q.a, q.b)
        for j in range(points):
            left = comp_id(x, j) if x in mult else None
            right = comp_id(y, j) if y in mult else None
            tag = f"{x}-{y}" if points == 1 else f"{x}-{y}:{j}"
            ids = [f"{tag}.{i + 1}" for i in range(len(selfs))]
            for vid, si in zip(ids, selfs):
                chain_self[vid] = si
                genus[vid] = 0
                order_ids.append(vid)
            seq = ([left] if left else []) + ids + ([right] if right else [])
            edges.extend(zip(seq, seq[1:]))
            if left is None:
                arrows.append((x, seq[0] if seq else None))
            if right is None:
                arrows.append((y, seq[-1] if seq else None))
            lm = z_mult[left] if left else 1
            rm = z_mult[right] if right else 1
            z_mult.update(zip(ids, _chain_multiplicities(selfs, lm, rm)))

    self_int: Dict[str, int] = dict(chain_self)
    for c in coverings:
        for j in range(c.components):
            vid = comp_id(c.vertex, j)
            total = sum(z_mult[b if a == vid else a] for a, b in edges if vid in (a, b))
            total += sum(1 for _, at in arrows if at == vid)
            value = Fraction(-total, z_mult[vid])
            if value.denominator != 1:
                raise InternalInconsistency(f"non-integral self-intersection {value} on {vid}")
            self_int[vid] = int(value)

    verts = [Vertex(v, self_int[v], genus[v], {"f_mult": n * z_mult[v], "z_mult": z_mult[v]})
             for v in order_ids]
    graph = DualGraph(verts, [(a, b, 1) for a, b in edges],
                      [Arrow(at, label, n) for label, at in sorted(arrows, key=lambda t: t[0])])
    if not check_balance(graph, "f_mult"):
        raise InternalInconsistency("pulled-back divisor of f is not balanced")
    if graph.vertices and not is_negative_definite(intersection_matrix(graph)):
        raise InternalInconsistency("intersection matrix is not negative definite")
    return JungResult(s, disc, record_used, data, coverings, graph, blow_down_minimize(graph))


def jung_resolve(s: Union[SurfaceGerm, Tuple[int, str]], order: int = DEFAULT_ORDER,
                 max_order: Optional[int] = None) -> DualGraph:
    """Dual graph of a resolution of the normalization of z^n + f = 0."""
    if not isinstance(s, SurfaceGerm):
        s = SurfaceGerm.from_text(*s)
    return jung_pipeline(s, order, max_order).graph
