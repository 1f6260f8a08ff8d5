from fractions import Fraction

import pytest

from oracles import tree_arms
from singres.curveres import embedded_resolution
from singres.errors import (
    NotSquarefree,
    NotThroughOrigin,
    RangeError,
    UnsupportedCovering,
    ZeroPolynomial,
)
from singres.graph import (
    check_balance,
    first_kind_vertices,
    graph_determinant,
    intersection_matrix,
    is_negative_definite,
)
from singres.jung import (
    QuasiOrdinaryPoint,
    SurfaceGerm,
    cover_of_exceptional,
    jung_pipeline,
    jung_resolve,
    local_quasi_ordinary_data,
)
from singres.poly import parse_poly
from singres.puiseux import CurveGerm


def shape(g):
    return sorted(v.self_int for v in g.vertices.values())


def det(g):
    return abs(graph_determinant(intersection_matrix(g))) if len(g) else 1


def edges(g):
    return [(a, b) for (a, b), c in g.edges.items() for _ in range(c)]


# -- pinned graphs ----------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 13))
def test_a_n(n):
    g = jung_resolve((n, "x*y"))
    assert g.is_path() and shape(g) == [-2] * (n - 1)
    assert det(g) == n
    assert check_balance(g, "f_mult") and is_negative_definite(intersection_matrix(g))


def test_d4():
    g = jung_resolve((2, "x^3 + y^3"))
    assert shape(g) == [-2] * 4 and det(g) == 4
    assert tree_arms(list(g.vertices), edges(g)) == [1, 1, 1]


def test_e8():
    g = jung_resolve((2, "x^3 + y^5"))
    assert shape(g) == [-2] * 8 and det(g) == 1
    assert tree_arms(list(g.vertices), edges(g)) == [1, 2, 4]
    assert all(v.genus == 0 for v in g.vertices.values())


@pytest.mark.parametrize("n,f,arms,size,d", [
    (3, "y^2 - x^3", [1, 1, 1], 4, 4),
    (4, "y^2 - x^3", [1, 2, 2], 6, 3),
    (5, "y^2 - x^3", [1, 2, 4], 8, 1),
    (2, "y^3 - x^4", [1, 2, 2], 6, 3),
    (3, "y^2 - x^4", [1, 2, 2], 6, 3),
    (2, "y*(y^2 - x^3)", [1, 2, 3], 7, 2),
    (2, "y^2 - x^4", None, 3, 4),
])
def test_other_ade(n, f, arms, size, d):
    # D4, E6, E8, E6, E6, E7, A3 after blowing down
    res = jung_pipeline(SurfaceGerm.from_text(n, f))
    g = res.minimized
    if arms is not None:
        assert len(g) == size and shape(g) == [-2] * size
        assert tree_arms(list(g.vertices), edges(g)) == arms
        assert det(g) == d
    else:
        assert g.is_path() and shape(g) == [-2] * size and det(g) == d
    assert not first_kind_vertices(g)


@pytest.mark.parametrize("n,f,self_int,d", [(3, "x^3 + y^3", -3, 3), (4, "x^2 - y^4", -2, 2),
                                            (6, "y^2 - x^3", -1, 1)])
def test_simple_elliptic(n, f, self_int, d):
    g = jung_pipeline(SurfaceGerm.from_text(n, f)).minimized
    (v,) = g.vertices.values()
    assert (v.self_int, v.genus) == (self_int, 1) and det(g) == d


def test_smooth_surface():
    g = jung_resolve((2, "x"))
    assert len(g) == 0
    # n = 1: the graph of a function is smooth; the base blow-ups all blow down
    res = jung_pipeline(SurfaceGerm.from_text(1, "y^2 - x^3"))
    assert len(res.graph) == 3 and len(res.minimized) == 0


@pytest.mark.parametrize("n,f", [(2, "x*y"), (3, "x*y"), (2, "x^3 + y^3"), (2, "x^3 + y^5"),
                                 (3, "y^2 - x^3"), (5, "y^2 - x^3"), (2, "y^2 - x^4"),
                                 (3, "x^3 + y^3"), (4, "x^2 - y^4"), (6, "y^2 - x^3"),
                                 (2, "x^2 - y^6"), (3, "x*y*(x - y)"), (2, "y^3 - x^4")])
def test_invariants(n, f):
    res = jung_pipeline(SurfaceGerm.from_text(n, f))
    g = res.graph
    assert check_balance(g, "f_mult")
    assert is_negative_definite(intersection_matrix(g))
    for v in g.vertices.values():
        assert v.dec["f_mult"] == n * v.dec["z_mult"]
    # blowing down keeps |det| and definiteness
    assert det(res.minimized) == det(g)
    if len(res.minimized):
        assert is_negative_definite(intersection_matrix(res.minimized))
    assert res.discriminant == (res.germ.f ** (n - 1)).normalized().with_vars(res.discriminant.vars)


# -- local data and covers --------------------------------------------------------

def test_local_data_cusp():
    record = embedded_resolution(CurveGerm.from_text("y^2 - x^3"))
    data = local_quasi_ordinary_data(record, 6)
    assert [(q.a, q.b) for q in data] == [(2, 6), (3, 6), (6, 1)]
    assert data[2].point == ("E3", "b0")


def test_local_data_node():
    record = embedded_resolution(CurveGerm.from_text("x*y"))
    data = local_quasi_ordinary_data(record, 2)
    assert sorted((q.a, q.b) for q in data) == [(2, 1), (2, 1)]


def test_exponents():
    q = QuasiOrdinaryPoint(("E1", "E3"), 2, 6)
    g = q.exponents(6)
    assert (g.e1, g.e2) == (Fraction(1, 3), 1)


@pytest.mark.parametrize("n,a,incident,expected", [
    (2, 2, [1, 1], (2, 1, 0)),      # double cover branched at two points
    (2, 4, [], (2, 2, 0)),          # a divisible by n, nothing incident: n copies
    (3, 3, [], (3, 3, 0)),
    (2, 3, [1, 1, 1], (1, 1, 0)),   # the D4 center
    (3, 3, [1, 1, 1], (3, 1, 1)),   # cubic cone: an elliptic curve
    (4, 4, [2, 1, 1], (4, 1, 1)),
    (2, 6, [2, 3, 1], (2, 1, 0)),
])
def test_cover_examples(n, a, incident, expected):
    c = cover_of_exceptional("E", n, a, incident)
    assert (c.sheets, c.components, c.genus) == expected
    assert c.ramification * c.sheets == n


def test_cover_parity():
    # a double cover needs an even number of branch points
    with pytest.raises(UnsupportedCovering):
        cover_of_exceptional("E", 2, 6, [2, 3])


def test_errors():
    with pytest.raises(RangeError):
        SurfaceGerm(0, parse_poly("x*y"))
    with pytest.raises(NotThroughOrigin):
        SurfaceGerm.from_text(2, "x + 1")
    with pytest.raises(NotSquarefree):
        SurfaceGerm.from_text(2, "x^2")
    with pytest.raises(ZeroPolynomial):
        SurfaceGerm.from_text(2, "0")


def test_equation():
    s = SurfaceGerm.from_text(3, "x*y")
    assert s.equation() == parse_poly("z^3 + x*y", ("x", "y", "z"))
