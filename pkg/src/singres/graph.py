"""Decorated dual graphs and their intersection matrices."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    MissingDecoration,
    NotSymmetric,
    UnknownVertex,
    UnsupportedContraction,
)

NON_NEGATIVE_REMAINDER = "NonNegativeRemainder"


@dataclass
class Vertex:
    id: str
    self_int: Optional[int]
    genus: int = 0
    dec: Dict[str, int] = field(default_factory=dict)


@dataclass
class Arrow:
    at: Optional[str]
    label: str
    mult: int = 1


def _edge_key(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class DualGraph:
    """Vertices with self-intersection, genus and integer decorations; a multigraph
    of intersection points; and arrows for non-compact curves (strict transforms).

    Graph operations return new graphs; instances are not mutated once built.
    """

    def __init__(self, vertices: Iterable[Vertex] = (),
                 edges: Iterable[Tuple[str, str, int]] = (),
                 arrows: Iterable[Arrow] = (),
                 flags: Iterable[str] = ()):
        self.vertices: Dict[str, Vertex] = {}
        for v in vertices:
            if v.id in self.vertices:
                raise ValueError(f"duplicate vertex id {v.id!r}")
            self.vertices[v.id] = Vertex(v.id, v.self_int, v.genus, dict(v.dec))
        self.edges: Counter = Counter()
        for e in edges:
            a, b = e[0], e[1]
            count = e[2] if len(e) > 2 else 1
            for x in (a, b):
                if x not in self.vertices:
                    raise UnknownVertex(f"edge endpoint {x!r} is not a vertex")
            if count:
                self.edges[_edge_key(a, b)] += count
        self.arrows: List[Arrow] = []
        for arr in arrows:
            if arr.at is not None and arr.at not in self.vertices:
                raise UnknownVertex(f"arrow attached to unknown vertex {arr.at!r}")
            self.arrows.append(Arrow(arr.at, arr.label, arr.mult))
        self.flags = tuple(sorted(set(flags)))

    # -- queries --------------------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    @property
    def ids(self) -> List[str]:
        return list(self.vertices)

    def edge_count(self, a: str, b: str) -> int:
        return self.edges.get(_edge_key(a, b), 0)

    def neighbors(self, v: str) -> List[str]:
        """Neighbors of v, repeated once per edge (loops excluded)."""
        out = []
        for (a, b), c in self.edges.items():
            if a == b:
                continue
            if a == v:
                out.extend([b] * c)
            elif b == v:
                out.extend([a] * c)
        return out

    def arrows_at(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.at == v]

    def has_loop(self, v: str) -> bool:
        return self.edges.get((v, v), 0) > 0

    def is_path(self) -> bool:
        """True for a (possibly empty) segment: connected, acyclic, max degree 2."""
        n = len(self.vertices)
        if n == 0:
            return True
        if sum(self.edges.values()) != n - 1:
            return False
        if any(len(self.neighbors(v)) > 2 or self.has_loop(v) for v in self.vertices):
            return False
        return self.is_connected()

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = next(iter(self.vertices))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def path_order(self) -> List[str]:
        """Vertices of a path from one end to the other (insertion order breaks ties)."""
        if not self.is_path():
            raise ValueError("graph is not a path")
        if not self.vertices:
            return []
        ends = [v for v in self.vertices if len(self.neighbors(v)) <= 1]
        order = [ends[0]]
        while len(order) < len(self.vertices):
            nxt = [w for w in self.neighbors(order[-1]) if w not in order]
            order.append(nxt[0])
        return order

    def copy(self, **changes) -> "DualGraph":
        return DualGraph(
            changes.get("vertices", self.vertices.values()),
            changes.get("edges", [(a, b, c) for (a, b), c in self.edges.items()]),
            changes.get("arrows", self.arrows),
            changes.get("flags", self.flags),
        )

    def __eq__(self, other):
        return isinstance(other, DualGraph) and self.to_json() == other.to_json()

    def __repr__(self):
        return f"DualGraph({len(self.vertices)} vertices, {sum(self.edges.values())} edges, {len(self.arrows)} arrows)"

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        data = {
            "vertices": [
                {k: v for k, v in (("id", x.id), ("self_int", x.self_int),
                                   ("genus", x.genus), ("dec", dict(sorted(x.dec.items()))))
                 if not (k == "self_int" and v is None)}
                for x in self.vertices.values()
            ],
            "edges": [[a, b, c] for (a, b), c in sorted(self.edges.items())],
            "arrows": [{"at": a.at, "label": a.label, "mult": a.mult} for a in self.arrows],
        }
        if self.flags:
            data["flags"] = list(self.flags)
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, data: dict) -> "DualGraph":
        verts = [Vertex(str(v["id"]), v.get("self_int"), int(v.get("genus", 0)),
                        {str(k): int(x) for k, x in v.get("dec", {}).items()})
                 for v in data.get("vertices", [])]
        edges = [(str(e[0]), str(e[1]), int(e[2]) if len(e) > 2 else 1) for e in data.get("edges", [])]
        arrows = [Arrow(a.get("at"), str(a.get("label", "")), int(a.get("mult", 1)))
                  for a in data.get("arrows", [])]
        return cls(verts, edges, arrows, data.get("flags", ()))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {json.dumps(name)} {{", "  node [shape=circle];"]
        for v in self.vertices.values():
            parts = [v.id]
            if v.self_int is not None:
                parts.append(str(v.self_int))
            if v.genus:
                parts.append(f"g={v.genus}")
            parts.extend(f"{k}={x}" for k, x in sorted(v.dec.items()))
            lines.append(f"  {json.dumps(v.id)} [label={json.dumps(chr(10).join(parts))}];")
        for (a, b), c in sorted(self.edges.items()):
            for _ in range(c):
                lines.append(f"  {json.dumps(a)} -- {json.dumps(b)};")
        for i, arr in enumerate(self.arrows):
            node = json.dumps(f"arrow{i}")
            lines.append(f"  {node} [shape=plaintext, label={json.dumps(arr.label)}];")
            if arr.at is not None:
                lines.append(f"  {json.dumps(arr.at)} -- {node} [dir=forward];")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------------
# intersection matrices

@dataclass(frozen=True)
class IntersectionMatrix:
    order: Tuple[str, ...]
    rows: Tuple[Tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def tolist(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


Matrix = Union[IntersectionMatrix, Sequence[Sequence[int]]]


def intersection_matrix(g: DualGraph, order: Optional[Sequence[str]] = None) -> IntersectionMatrix:
    order = list(g.vertices) if order is None else list(order)
    for v in order:
        if v not in g.vertices:
            raise UnknownVertex(f"{v!r} is not a vertex")
    if sorted(order) != sorted(g.vertices):
        raise UnknownVertex("order must be a permutation of the vertex ids")
    rows = []
    for a in order:
        row = []
        for b in order:
            if a == b:
                si = g.vertices[a].self_int
                if si is None:
                    raise MissingDecoration(f"vertex {a!r} has no self-intersection")
                row.append(si)
            else:
                row.append(g.edge_count(a, b))
        rows.append(tuple(row))
    return IntersectionMatrix(tuple(order), tuple(rows))


def _rows(m: Matrix) -> List[List[int]]:
    rows = [list(r) for r in m]
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n:
            raise NotSymmetric("matrix is not square")
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    return rows


def _leading_minors(rows: List[List[int]]) -> List[int]:
    """Leading principal minors by Bareiss elimination without pivoting.

    Stops (returning a shorter list ending in 0) at the first vanishing minor.
    """
    a = [list(r) for r in rows]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        minors.append(a[k][k])
        if a[k][k] == 0:
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return minors


def is_negative_definite(m: Matrix) -> bool:
    """Sylvester's criterion on -M: every leading principal minor positive."""
    rows = _rows(m)
    neg = [[-x for x in r] for r in rows]
    return all(x > 0 for x in _leading_minors(neg))


def graph_determinant(m: Matrix) -> int:
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -----------------------------------------------------------------------------
# contraction and balance

def first_kind_vertices(g: DualGraph) -> List[str]:
    return [v.id for v in g.vertices.values() if v.genus == 0 and v.self_int == -1]


def contract_vertex(g: DualGraph, v: str) -> DualGraph:
    """Blow down one smooth rational (-1)-curve."""
    if v not in g.vertices:
        raise UnknownVertex(f"{v!r} is not a vertex")
    if g.has_loop(v):
        raise UnsupportedContraction(f"{v!r} carries a loop")
    nbrs = g.neighbors(v)
    if len(set(nbrs)) != len(nbrs):
        raise UnsupportedContraction(f"{v!r} meets a neighbor in several points")
    verts = []
    for x in g.vertices.values():
        if x.id == v:
            continue
        si = x.self_int + nbrs.count(x.id) if x.self_int is not None else None
        verts.append(Vertex(x.id, si, x.genus, dict(x.dec)))
    edges = Counter({k: c for k, c in g.edges.items() if v not in k})
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            edges[_edge_key(nbrs[i], nbrs[j])] += 1
    arrows = []
    for arr in g.arrows:
        if arr.at != v:
            arrows.append(arr)
        elif nbrs:
            # the curve now passes through the image point, meeting every neighbor
            arrows.extend(Arrow(w, arr.label, arr.mult) for w in nbrs)
        else:
            arrows.append(Arrow(None, arr.label, arr.mult))
    return DualGraph(verts, [(a, b, c) for (a, b), c in edges.items()], arrows, g.flags)


def blow_down_minimize(g: DualGraph) -> DualGraph:
    """Contract (-1)-curves of genus 0 until none is left.

    The result carries the ``NonNegativeRemainder`` flag when some remaining
    vertex has self-intersection >= 0 or the matrix is no longer negative
    definite.
    """
    while True:
        cands = first_kind_vertices(g)
        if not cands:
            break
        g = contract_vertex(g, cands[0])
    flags = set(g.flags)
    if g.vertices and (any(x.self_int >= 0 for x in g.vertices.values())
                       or not is_negative_definite(intersection_matrix(g))):
        flags.add(NON_NEGATIVE_REMAINDER)
    return g.copy(flags=flags)


def check_balance(g: DualGraph, mult_name: str) -> bool:
    """mult(v)*self_int(v) + sum of neighbor mults + sum of arrow mults == 0 at every v."""
    for v in g.vertices.values():
        if mult_name not in v.dec:
            raise MissingDecoration(f"vertex {v.id!r} lacks decoration {mult_name!r}")
        if v.self_int is None:
            raise MissingDecoration(f"vertex {v.id!r} has no self-intersection")
    for v in g.vertices.values():
        total = v.dec[mult_name] * v.self_int
        total += sum(g.vertices[w].dec[mult_name] for w in g.neighbors(v.id))
        total += sum(a.mult for a in g.arrows_at(v.id))
        if total != 0:
            return False
    return True


def solve_linear(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Exact solution of a nonsingular square system (Gauss-Jordan over Q)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
