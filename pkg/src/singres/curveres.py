"""Embedded resolution of plane curve germs by point blow-ups.

Centers are tracked on branch parametrizations.  At every infinitely near
point we keep local coordinates ``(u, v)`` in which the exceptional curves
through the point are among the axes ``{u=0}`` and ``{v=0}``; blowing up
sends a branch ``(U(t), V(t))`` to one of

* ``(U, V/U)``        if ord U < ord V (the point on E where {v=0}' passes),
* ``(U, V/U - c)``    if ord U = ord V, c the ratio of leading coefficients,
* ``(U/V, V)``        if ord U > ord V (the point on E where {u=0}' passes).

A point is blown up when the total transform is not a normal crossing there,
and the origin is also blown up whenever the germ is singular.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import rational_root
from .errors import InconsistentInput, IrrationalCenter, IrrationalCoefficient
from .graph import Arrow, DualGraph, Vertex, solve_linear
from .poly import upoly_to_text
from .puiseux import (
    DEFAULT_ORDER,
    CurveGerm,
    PuiseuxBranch,
    adaptive,
)
from .series import Series

Pair = Tuple[Series, Series]


def _label(i: int) -> str:
    return f"b{i}"


def _index(label: str) -> int:
    return int(label[1:])


# -----------------------------------------------------------------------------
# one blow-up on a parametrized branch

def _direction(pair: Pair):
    """Chart key of the point of E the branch goes to, with (ord U, ord V)."""
    u, v = pair
    a, b = u.valuation(), v.valuation()
    if a < b:
        return ("A", Fraction(0)), a, b
    if a > b:
        return ("B", None), a, b
    return ("A", v.coeff(b) / u.coeff(a)), a, b


def _blow_up_pair(pair: Pair, key, cap: int) -> Pair:
    u, v = pair
    if key[0] == "B":
        return u.divide(v, cap), v
    w = v.divide(u, cap)
    if key[1]:
        w = w - key[1]
    return u, w


def _binomial_root(h: Series, n: int, prec: int) -> Series:
    """(1 + h)^(1/n) for ord h >= 1, modulo t^prec."""
    alpha = Fraction(1, n)
    total = Series([1], prec)
    power = Series([1], prec)
    coef = Fraction(1)
    for k in range(1, prec):
        coef = coef * (alpha - k + 1) / k
        power = (power * h).truncate(prec)
        if power.low() >= prec:
            break
        total = total + power * coef
    return total.truncate(prec)


def _compose(f: Series, g: Series, prec: int) -> Series:
    """f(g(t)) modulo t^prec, with g(0) = 0."""
    acc = Series((), prec)
    for c in reversed(f.coeffs[:prec]):
        acc = (acc * g + c).truncate(prec)
    return acc


def _revert(phi: Series, prec: int) -> Series:
    """psi with phi(psi(s)) = s for phi = c*t + ..., c != 0."""
    c = phi.coeff(1)
    dphi = Series([k * a for k, a in enumerate(phi.coeffs)][1:], phi.prec and phi.prec - 1)
    psi = Series([0, 1 / c], prec)
    s = Series([0, 1])
    for _ in range(prec.bit_length() + 1):
        err = _compose(phi, psi, prec) - s
        psi = (psi - err * _compose(dphi, psi, prec).inverse(prec)).truncate(prec)
    return psi


def reparametrize(x: Series, y: Series, cap: int) -> PuiseuxBranch:
    """Rewrite a parametrized branch (x(t), y(t)) in the form x = s^m."""
    if x.is_exact_zero():
        if y.valuation() != 1:
            raise InconsistentInput("vertical branch must be smooth")
        return PuiseuxBranch(1, (), None, True)
    m = x.valuation()
    unit = x.shift(m)
    c0 = unit.coeff(0)
    if unit.exact and len(unit.coeffs) == 1 and c0 == 1:
        return PuiseuxBranch.from_terms(m, y.terms(), y.prec)
    r = rational_root(c0, m)
    if r is None:
        raise IrrationalCenter(f"reparametrization needs a rational {m}-th root of {c0}",
                               [-c0] + [Fraction(0)] * (m - 1) + [Fraction(1)])
    prec = cap
    for s in (x, y):
        if s.prec is not None:
            prec = min(prec, s.prec - m + 1)
    prec = max(prec, 2)
    w = _binomial_root((unit * (1 / c0) - 1).truncate(prec), m, prec)
    phi = (Series([0, 1]) * w * r).truncate(prec)
    psi = _revert(phi, prec)
    y2 = _compose(y.truncate(prec), psi, prec)
    return PuiseuxBranch.from_terms(m, y2.terms(), prec)


@dataclass(frozen=True)
class BlowUp:
    chart: str                      # "y/x": (x, y/x) or "x/y": (x/y, y)
    center: Tuple[Fraction, Fraction]
    branch: PuiseuxBranch           # strict transform, translated to the center


def blow_up_branch(branch: PuiseuxBranch, cap: int = DEFAULT_ORDER) -> BlowUp:
    """Strict transform of a branch through the origin under one point blow-up."""
    pair = (branch.x_series(), branch.y_series())
    key, a, b = _direction(pair)
    u, v = _blow_up_pair(pair, key, cap)
    if key[0] == "A":
        return BlowUp("y/x", (Fraction(0), key[1]), reparametrize(u, v, cap))
    return BlowUp("x/y", (Fraction(0), Fraction(0)), reparametrize(u, v, cap))


# -----------------------------------------------------------------------------
# resolution record

@dataclass
class CenterNode:
    index: int
    parent: Optional[int]
    multiplicity: int
    branch_mults: Dict[int, int]
    proximate_to: Tuple[int, ...]

    @property
    def id(self) -> str:
        return f"p{self.index}"

    @property
    def exceptional(self) -> str:
        return f"E{self.index}"

    @property
    def satellite(self) -> bool:
        return len(self.proximate_to) == 2

    @property
    def branches(self) -> Tuple[int, ...]:
        return tuple(sorted(self.branch_mults))

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "exceptional": self.exceptional,
            "parent": None if self.parent is None else f"p{self.parent}",
            "multiplicity": self.multiplicity,
            "branch_multiplicities": {_label(i): m for i, m in sorted(self.branch_mults.items())},
            "proximate_to": [f"p{j}" for j in self.proximate_to],
            "kind": "satellite" if self.satellite else "free",
        }


@dataclass
class ResolutionRecord:
    tree: List[CenterNode]
    graph: DualGraph
    n_branches: int
    branches: Tuple[PuiseuxBranch, ...] = ()
    name: str = ""

    def multiplicity_sequences(self) -> List[List[int]]:
        return [[node.branch_mults[i] for node in self.tree if i in node.branch_mults]
                for i in range(self.n_branches)]

    def combinatorial_json(self) -> dict:
        return {
            "tree": [n.to_json() for n in self.tree],
            "graph": self.graph.to_json(),
            "n_branches": self.n_branches,
        }

    def to_json(self) -> dict:
        data = {"germ": self.name, "branches": [b.to_json() for b in self.branches]}
        data.update(self.combinatorial_json())
        return data


@dataclass
class _Point:
    labels: Tuple[Optional[int], Optional[int]]   # exceptional curve {u=0}, {v=0}
    parent: Optional[int]
    branches: Dict[int, Pair] = field(default_factory=dict)


def _is_normal_crossing(point: _Point, orders: Dict[int, Tuple[int, int]]) -> bool:
    curves = [i for i, lab in enumerate(point.labels) if lab is not None]
    if len(curves) + len(point.branches) > 2:
        return False
    if any(min(a, b) != 1 for a, b in orders.values()):
        return False
    if len(point.branches) == 2:
        keys = [_direction(p)[0] for p in point.branches.values()]
        return keys[0] != keys[1]
    if len(point.branches) == 1 and curves:
        a, b = next(iter(orders.values()))
        # transverse to {u=0} iff ord u = 1, to {v=0} iff ord v = 1
        return (a if curves[0] == 0 else b) == 1
    return True


def _resolve_pairs(pairs: Sequence[Pair], cap: int):
    nodes: List[CenterNode] = []
    self_int: Dict[int, int] = {}
    f_mult: Dict[int, int] = {}
    m_mult: Dict[int, int] = {}
    edges: set = set()
    arrows: List[Tuple[Optional[int], int]] = []

    stack = [_Point((None, None), None, dict(enumerate(pairs)))]
    while stack:
        point = stack.pop()
        orders = {i: tuple(s.valuation() for s in p) for i, p in point.branches.items()}
        mults = {i: min(a, b) for i, (a, b) in orders.items()}
        is_origin = point.parent is None and point.labels == (None, None)
        total = sum(mults.values())
        if _is_normal_crossing(point, orders) and not (is_origin and total >= 2):
            curves = [lab for lab in point.labels if lab is not None]
            for i in point.branches:
                arrows.append((curves[0] if curves else None, i))
            continue

        k = len(nodes) + 1
        curves = [lab for lab in point.labels if lab is not None]
        nodes.append(CenterNode(k, point.parent, total, mults, tuple(sorted(curves))))
        self_int[k] = -1
        for c in curves:
            self_int[c] -= 1
        f_mult[k] = sum(f_mult[c] for c in curves) + total
        m_mult[k] = sum(m_mult[c] for c in curves) + (1 if is_origin else 0)
        if len(curves) == 2:
            edges.discard(tuple(sorted(curves)))
        for c in curves:
            edges.add((c, k))

        children: Dict[tuple, _Point] = {}
        lu, lv = point.labels
        for i, pair in sorted(point.branches.items()):
            key, _, _ = _direction(pair)
            if key not in children:
                if key[0] == "B":
                    labels = (lu, k)
                elif key[1] == 0:
                    labels = (k, lv)
                else:
                    labels = (k, None)
                children[key] = _Point(labels, k)
            children[key].branches[i] = _blow_up_pair(pair, key, cap)

        def order_key(key):
            return (0, key[1]) if key[0] == "A" else (1, 0)
        # depth-first, children visited in chart order
        for key in sorted(children, key=order_key, reverse=True):
            stack.append(children[key])

    verts = [Vertex(f"E{k}", self_int[k], 0, {"f_mult": f_mult[k], "m_mult": m_mult[k]})
             for k in range(1, len(nodes) + 1)]
    graph_edges = [(f"E{a}", f"E{b}", 1) for a, b in sorted(edges)]
    graph_arrows = [Arrow(None if at is None else f"E{at}", _label(i), 1)
                    for at, i in sorted(arrows, key=lambda t: t[1])]
    return nodes, DualGraph(verts, graph_edges, graph_arrows)


def _pairs(branches: Sequence[PuiseuxBranch]) -> List[Pair]:
    return [(b.x_series(), b.y_series()) for b in branches]


def embedded_resolution(germ: CurveGerm, order: int = DEFAULT_ORDER,
                        max_order: Optional[int] = None,
                        allow_conjugates: bool = False) -> ResolutionRecord:
    """Minimal embedded resolution of a reduced germ (total transform with normal crossings).

    A branch with an irrational Puiseux coefficient is resolved through a
    surrogate with the same characteristic exponents and contacts, since all
    its centers are rational.  Conjugate branches that separate at an
    irrational point raise IrrationalCenter, unless ``allow_conjugates`` is
    set, in which case the combinatorial resolution is returned (the centers
    are then only determined up to Galois conjugation).
    """

    def compute(branches):
        cap = max([order] + [b.trunc or 0 for b in branches])
        nodes, graph = _resolve_pairs(_pairs(branches), cap)
        return ResolutionRecord(nodes, graph, len(branches), tuple(branches), germ.name)

    if germ.expandable and not allow_conjugates:
        conj = germ.conjugate_factors(order)
        if conj:
            raise IrrationalCenter(
                f"conjugate branches separate at the roots of {upoly_to_text(conj[0])}", list(conj[0]))
    try:
        return adaptive(germ, compute, order, max_order, surrogate=True)
    except IrrationalCenter:
        raise
    except IrrationalCoefficient as exc:
        raise IrrationalCenter(str(exc), exc.polynomial) from exc


# -----------------------------------------------------------------------------
# encodings

ENCODINGS = ("a", "b", "c", "d")


def encode(record: ResolutionRecord, which: str) -> dict:
    if which == "a":
        return {"encoding": "a", "branches": record.multiplicity_sequences()}
    if which in ("b", "c"):
        verts = []
        for v in record.graph.vertices.values():
            item = {"id": v.id, "genus": v.genus}
            if which == "b":
                item["dec"] = {"m_mult": v.dec["m_mult"]}
            else:
                item["self_int"] = v.self_int
                item["dec"] = {}
            verts.append(item)
        g = record.graph.to_json()
        return {"encoding": which,
                "graph": {"vertices": verts, "edges": g["edges"],
                          "arrows": [{"at": a["at"], "label": a["label"], "mult": 1}
                                     for a in g["arrows"]]}}
    if which == "d":
        return {"encoding": "d",
                "n_branches": record.n_branches,
                "nodes": [{"id": n.id, "parent": n.to_json()["parent"],
                           "multiplicity": n.multiplicity,
                           "proximate_to": [f"p{j}" for j in n.proximate_to],
                           "kind": "satellite" if n.satellite else "free",
                           "branches": [_label(i) for i in n.branches]}
                          for n in record.tree]}
    raise InconsistentInput(f"unknown encoding {which!r}; expected one of {ENCODINGS}")


def _ord(vid: str) -> int:
    return int(vid[1:])


def _record_from_intersections(self_int: Dict[int, int], edges: set,
                               arrows: List[Tuple[Optional[int], str]]) -> ResolutionRecord:
    """Rebuild the full record from the total-transform graph with self-intersections."""
    k_max = len(self_int)
    if sorted(self_int) != list(range(1, k_max + 1)):
        raise InconsistentInput("vertices must be E1..Ek in blow-up order")
    labels = sorted({lab for _, lab in arrows}, key=_index)
    n_branches = len(labels)

    # undo blow-ups from the last one to recover the proximity relation
    cur_si = dict(self_int)
    cur_edges = {tuple(sorted(e)) for e in edges}
    prox: Dict[int, Tuple[int, ...]] = {}
    for k in range(k_max, 0, -1):
        if cur_si[k] != -1:
            raise InconsistentInput(f"E{k} is not a (-1)-curve when it should be contracted")
        nbrs = sorted({a if b == k else b for a, b in cur_edges if k in (a, b)})
        if len(nbrs) > 2 or any(j > k for j in nbrs):
            raise InconsistentInput(f"E{k} meets curves incompatibly with a blow-up sequence")
        prox[k] = tuple(nbrs)
        for j in nbrs:
            cur_si[j] += 1
        cur_edges = {e for e in cur_edges if k not in e}
        if len(nbrs) == 2:
            cur_edges.add(tuple(nbrs))
        del cur_si[k]

    ids = list(range(1, k_max + 1))
    matrix = [[self_int[a] if a == b else (1 if tuple(sorted((a, b))) in edges else 0)
               for b in ids] for a in ids]

    def solve(rhs):
        return dict(zip(ids, solve_linear(matrix, rhs))) if ids else {}

    def arrow_vector(pred):
        return [Fraction(-sum(1 for at, lab in arrows if at == k and pred(lab))) for k in ids]

    f_all = solve(arrow_vector(lambda lab: True))
    m_vec = [Fraction(-1 if k == 1 else 0) for k in ids]
    m_all = solve(m_vec)
    per_branch = {_index(lab): solve(arrow_vector(lambda x, lab=lab: x == lab)) for lab in labels}

    nodes = []
    for k in ids:
        bm = {}
        for i, f in per_branch.items():
            val = f[k] - sum(f[j] for j in prox[k])
            if val.denominator != 1 or val < 0:
                raise InconsistentInput("multiplicities are not consistent with a resolution")
            if val:
                bm[i] = int(val)
        nodes.append(CenterNode(k, max(prox[k]) if prox[k] else None,
                                sum(bm.values()), bm, prox[k]))
    verts = []
    for k in ids:
        for name, val in (("f_mult", f_all[k]), ("m_mult", m_all[k])):
            if val.denominator != 1:
                raise InconsistentInput(f"non-integral {name} on E{k}")
        verts.append(Vertex(f"E{k}", self_int[k], 0,
                            {"f_mult": int(f_all[k]), "m_mult": int(m_all[k])}))
    graph = DualGraph(verts, [(f"E{a}", f"E{b}", 1) for a, b in sorted(edges)],
                      [Arrow(None if at is None else f"E{at}", lab, 1)
                       for at, lab in sorted(arrows, key=lambda t: _index(t[1]))])
    return ResolutionRecord(nodes, graph, n_branches)


def _graph_parts(payload_graph: dict):
    edges = {tuple(sorted((_ord(e[0]), _ord(e[1])))) for e in payload_graph["edges"]}
    arrows = [(None if a["at"] is None else _ord(a["at"]), a["label"])
              for a in payload_graph["arrows"]]
    return edges, arrows


def _proximities_from_sequence(seq: Sequence[int]) -> List[Tuple[int, ...]]:
    """Proximity sets of a single branch from its multiplicity sequence.

    The points proximate to p_i are the consecutive p_{i+1}, ..., p_{i+s} with
    m_i = m_{i+1} + ... + m_{i+s}, where the sequence continues with 1's.
    """
    n = len(seq)
    ext = list(seq) + [1] * (max(seq, default=1) + 1)
    prox: List[List[int]] = [[] for _ in range(n + 1)]
    for i in range(n):
        total, j = 0, i + 1
        while total < ext[i]:
            total += ext[j]
            if j < n:
                prox[j].append(i + 1)
            j += 1
        if total != ext[i]:
            raise InconsistentInput(f"{list(seq)} violates the proximity equalities")
    return [tuple(sorted(p)) for p in prox[:n]]


def decode(payload: dict) -> ResolutionRecord:
    """Rebuild the combinatorial resolution record from any single encoding.

    Encoding (a) is decodable for single-branch germs only.
    """
    which = payload.get("encoding")
    if which == "c":
        g = payload["graph"]
        self_int = {_ord(v["id"]): int(v["self_int"]) for v in g["vertices"]}
        edges, arrows = _graph_parts(g)
        return _record_from_intersections(self_int, edges, arrows)
    if which == "b":
        g = payload["graph"]
        m = {_ord(v["id"]): int(v["dec"]["m_mult"]) for v in g["vertices"]}
        edges, arrows = _graph_parts(g)
        self_int = {}
        for k, mk in m.items():
            nbr = sum(m[b if a == k else a] for a, b in edges if k in (a, b))
            val = Fraction(-(nbr + (1 if k == 1 else 0)), mk)
            if val.denominator != 1:
                raise InconsistentInput(f"m_mult decorations inconsistent at E{k}")
            self_int[k] = int(val)
        return _record_from_intersections(self_int, edges, arrows)
    if which == "d":
        nodes = payload["nodes"]
        n_branches = payload.get("n_branches")
        self_int: Dict[int, int] = {}
        edges: set = set()
        last: Dict[str, int] = {}
        for node in nodes:
            k = _ord(node["id"])
            curves = [_ord(p) for p in node["proximate_to"]]
            self_int[k] = -1
            for c in curves:
                self_int[c] -= 1
            if len(curves) == 2:
                edges.discard(tuple(sorted(curves)))
            for c in curves:
                edges.add((c, k))
            for lab in node["branches"]:
                last[lab] = max(last.get(lab, 0), k)
        labels = [_label(i) for i in range(n_branches)] if n_branches is not None else sorted(last, key=_index)
        arrows = [(last.get(lab), lab) for lab in labels]
        record = _record_from_intersections(self_int, edges, arrows)
        for node, rebuilt in zip(nodes, record.tree):
            if node["multiplicity"] != rebuilt.multiplicity:
                raise InconsistentInput(f"multiplicity at {node['id']} contradicts the proximities")
        return record
    if which == "a":
        seqs = payload["branches"]
        if len(seqs) != 1:
            raise InconsistentInput("encoding (a) determines the others only for a single branch")
        seq = seqs[0]
        prox = _proximities_from_sequence(seq)
        nodes = [{"id": f"p{k + 1}", "multiplicity": m, "branches": ["b0"],
                  "proximate_to": [f"p{j}" for j in prox[k]]} for k, m in enumerate(seq)]
        return decode({"encoding": "d", "n_branches": 1, "nodes": nodes})
    raise InconsistentInput(f"unknown encoding {which!r}")
