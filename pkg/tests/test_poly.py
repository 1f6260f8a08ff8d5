from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from singres.errors import NotUnitary, PolySyntaxError, UnknownVariable, ZeroPolynomial
from singres.poly import (
    Poly,
    discriminant_wrt,
    is_squarefree,
    newton_polygon,
    parse_poly,
    poly_gcd,
    rational_roots,
    resultant,
    upoly_to_text,
)

XYZ = ("x", "y", "z")


def P(text, vars=("x", "y")):
    return parse_poly(text, vars)


# -- parsing and printing -----------------------------------------------------

def test_parse_examples():
    assert P("y^2 - x^3").terms == {(0, 2): 1, (3, 0): -1}
    assert P("0").terms == {}
    assert P("(x+y)^2").terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_parse_syntax_variants():
    assert P("2x y**2 - 3/4*x") == P("2*x*y^2 - (3/4)*x")
    assert P("-(x - y)") == P("y - x")
    assert P("x^2/2") == P("1/2*x^2")


@pytest.mark.parametrize("text", ["x +", "(x", "x^y", "x $ y", "x/y", "^2"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError):
        P(text)


def test_parse_error_position():
    with pytest.raises(PolySyntaxError) as info:
        P("x + $")
    assert info.value.position == 4


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        P("x + w")


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                       st.fractions(max_denominator=9).filter(bool), max_size=6))
def test_text_roundtrip(terms):
    f = Poly(terms)
    assert P(f.to_text()) == f


# -- ring axioms --------------------------------------------------------------

small_polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                              st.integers(-4, 4), max_size=5).map(Poly)
tiny_polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                             st.integers(-3, 3), max_size=4).map(Poly)


@given(small_polys, small_polys, small_polys)
def test_distributive(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - g) + g == f


@given(small_polys, small_polys)
def test_exact_division(f, g):
    if g.is_zero():
        return
    assert (f * g).exquo(g) == f


# -- resultants ---------------------------------------------------------------

def _from_roots(roots, var="x", lead=1):
    f = Poly.constant(lead, (var,))
    for r in roots:
        f = f * (Poly.variable(var, (var,)) - r)
    return f


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       st.lists(st.integers(-6, 6), min_size=1, max_size=4),
       st.integers(1, 3))
def test_resultant_root_formula(roots, gcoeffs, lead):
    # Res(f, g) = lc(f)^deg(g) * prod g(root)
    f = _from_roots(roots, lead=lead)
    g = Poly({(k,): c for k, c in enumerate(gcoeffs)}, ("x",))
    if g.is_zero():
        return
    dg = g.degree("x")
    expected = Fraction(lead) ** dg
    for r in roots:
        expected *= g.evaluate({"x": Fraction(r)})
    assert resultant(f, g, "x") == Poly.constant(expected, ("x",))


@settings(max_examples=40)
@given(small_polys, small_polys, st.integers(-3, 3))
def test_resultant_specializes(f, g, x0):
    # leading coefficients in y must survive the specialization
    if f.degree("y") <= 0 or g.degree("y") <= 0:
        return
    if f.leading_coefficient_in("y").evaluate({"x": Fraction(x0), "y": 0}) == 0:
        return
    if g.leading_coefficient_in("y").evaluate({"x": Fraction(x0), "y": 0}) == 0:
        return
    r = resultant(f, g, "y").evaluate({"x": Fraction(x0), "y": Fraction(0)})
    fy = Poly({}, ("y",))
    gy = Poly({}, ("y",))
    for (i, j), c in f.terms.items():
        fy = fy + Poly({(j,): c * Fraction(x0) ** i}, ("y",))
    for (i, j), c in g.terms.items():
        gy = gy + Poly({(j,): c * Fraction(x0) ** i}, ("y",))
    assert resultant(fy, gy, "y").constant_term() == r


@given(tiny_polys, tiny_polys, tiny_polys)
@settings(max_examples=30)
def test_common_factor_iff_zero_resultant(f, g, h):
    if h.degree("y") <= 0 or f.is_zero() or g.is_zero():
        return
    assert resultant(f * h, g * h, "y").is_zero()


def test_coprime_resultant_nonzero():
    assert not resultant(P("y^2 - x^3"), P("y - x"), "y").is_zero()
    assert resultant(P("y^2 - x^2"), P("y - x"), "y").is_zero()


# -- discriminants ------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("z^2 + x*y", "x*y"),
    ("z - x^2 - y", "1"),
    ("z^2 + x^3 + y^3", "x^3 + y^3"),
    ("z^3 + x*y", "x^2*y^2"),
])
def test_discriminant_examples(text, expected):
    assert discriminant_wrt(P(text, XYZ), "z") == P(expected)


def test_discriminant_unnormalized():
    d = discriminant_wrt(P("z^2 + x*y", XYZ), "z", normalize=False)
    assert d == P("-4*x*y")


def test_discriminant_not_unitary():
    with pytest.raises(NotUnitary):
        discriminant_wrt(P("x*z^2 + y", XYZ), "z")


@settings(max_examples=30)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3),
       st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_discriminant_of_product(fc, gc):
    # disc(f g) = +-disc(f) disc(g) Res(f, g)^2 for monic f, g in z over Q[x]
    z = Poly.variable("z", ("x", "z"))
    x = Poly.variable("x", ("x", "z"))
    f = z ** len(fc)
    for k, c in enumerate(fc):
        f = f + x ** (k + 1) * c * z ** k
    g = z ** len(gc) + x
    for k, c in enumerate(gc[1:], 1):
        g = g + x ** k * c * z ** k
    res = resultant(f, g, "z")
    if res.is_zero():
        return
    disc = discriminant_wrt(f * g, "z", normalize=False)
    r2 = (res * res).drop_var("z")
    assert disc.divmod_lex(r2)[1].is_zero()


# -- gcd, squarefree ----------------------------------------------------------

def test_squarefree_examples():
    assert is_squarefree(P("y^2 - x^3"))
    assert not is_squarefree(P("(y-x)^2"))
    assert is_squarefree(P("x*y"))
    assert not is_squarefree(P("x^2*y"))
    with pytest.raises(ZeroPolynomial):
        is_squarefree(P("0"))


def test_gcd():
    g = poly_gcd(P("(y-x^2)*(y+x)"), P("(y-x^2)*(y-x)^3"))
    assert g == P("y - x^2") or g == P("x^2 - y")


@given(tiny_polys, tiny_polys, tiny_polys)
@settings(max_examples=30)
def test_gcd_divides(f, g, h):
    if h.is_zero() or f.is_zero() or g.is_zero():
        return
    d = poly_gcd(f * h, g * h)
    assert (f * h).divmod_lex(d)[1].is_zero()
    assert (g * h).divmod_lex(d)[1].is_zero()
    assert d.divmod_lex(h.normalized())[1].is_zero() or h.is_constant()


# -- Newton polygon -----------------------------------------------------------

def test_newton_polygon_examples():
    npg = newton_polygon(P("y^2 - x^3"))
    assert npg.edges == (((0, 2), (3, 0), Fraction(3, 2)),)
    assert newton_polygon(P("x^2*y")).edges == ()
    assert newton_polygon(P("x^2*y")).vertices == ((2, 1),)
    npg = newton_polygon(P("y^2 - x^2 - x^3"))
    assert npg.edges == (((0, 2), (2, 0), Fraction(1)), ((2, 0), (3, 0), None))
    with pytest.raises(ZeroPolynomial):
        newton_polygon(P("0"))


@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.just(1),
                       min_size=1, max_size=8))
def test_newton_polygon_convex(support):
    f = Poly(support)
    npg = newton_polygon(f)
    slopes = [e[2] for e in npg.edges if e[2] is not None]
    assert slopes == sorted(slopes)  # steeper edges further right
    for a, b, _ in npg.edges:
        for p in support:
            # every support point lies on or above each edge line
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            assert cross >= 0


# -- univariate helpers ---------------------------------------------------------

def test_rational_roots():
    roots, rest = rational_roots([Fraction(-2), Fraction(1), Fraction(1)])
    assert roots == {Fraction(1): 1, Fraction(-2): 1} and len(rest) == 1
    roots, rest = rational_roots([Fraction(1), Fraction(-1), Fraction(1)])
    assert roots == {} and len(rest) == 3
    roots, _ = rational_roots([Fraction(1), Fraction(-2), Fraction(1)])
    assert roots == {Fraction(1): 2}
    assert upoly_to_text([1, -1, 1]) == "w^2 - w + 1"
