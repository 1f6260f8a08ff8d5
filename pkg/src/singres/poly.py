"""Sparse exact polynomials over Q in a few named variables.

A :class:`Poly` maps exponent tuples to nonzero Fractions.  Two-variable
polynomials in ``(x, y)`` are the input language for curve germs; a third
variable ``z`` appears only for discriminants of surface equations.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    NotUnitary,
    PolySyntaxError,
    UnknownVariable,
    ZeroPolynomial,
)

Monomial = Tuple[int, ...]
DEFAULT_VARS = ("x", "y")


class Poly:
    __slots__ = ("terms", "vars")

    def __init__(self, terms: Optional[Dict[Monomial, Fraction]] = None,
                 vars: Sequence[str] = DEFAULT_VARS):
        self.vars = tuple(vars)
        clean = {}
        for mon, c in (terms or {}).items():
            if len(mon) != len(self.vars):
                raise ValueError(f"monomial {mon} does not match variables {self.vars}")
            if c:
                clean[tuple(mon)] = Fraction(c)
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c, vars=DEFAULT_VARS) -> "Poly":
        return cls({(0,) * len(vars): Fraction(c)}, vars)

    @classmethod
    def variable(cls, name: str, vars=DEFAULT_VARS) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(f"unknown variable {name!r}; expected one of {vars}")
        mon = tuple(int(v == name) for v in vars)
        return cls({mon: Fraction(1)}, vars)

    def _like(self, terms) -> "Poly":
        return Poly(terms, self.vars)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.vars)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mon, c in other.terms.items():
            out[mon] = out.get(mon, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = tuple(a + b for a, b in zip(m1, m2))
                out[mon] = out.get(mon, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return self._like({m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.vars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.to_text()!r}, vars={self.vars})"

    def __str__(self):
        return self.to_text()

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise UnknownVariable(f"unknown variable {var!r}") from None

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        i = self.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(sum(m) for m in self.terms)

    def coefficients_in(self, var: str) -> List["Poly"]:
        """Coefficients of var^0, var^1, ... as polynomials free of ``var``."""
        i = self.index(var)
        out = [dict() for _ in range(self.degree(var) + 1)]
        for mon, c in self.terms.items():
            rest = mon[:i] + (0,) + mon[i + 1:]
            out[mon[i]][rest] = c
        return [self._like(t) for t in out]

    def leading_coefficient_in(self, var: str) -> "Poly":
        return self.coefficients_in(var)[-1]

    def diff(self, var: str) -> "Poly":
        i = self.index(var)
        out = {}
        for mon, c in self.terms.items():
            if mon[i]:
                new = mon[:i] + (mon[i] - 1,) + mon[i + 1:]
                out[new] = c * mon[i]
        return self._like(out)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        """Largest term in lexicographic order on exponent tuples."""
        if not self.terms:
            raise ZeroPolynomial("leading term of the zero polynomial")
        mon = max(self.terms)
        return mon, self.terms[mon]

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def normalized(self) -> "Poly":
        """Primitive integer representative with positive lex-leading coefficient."""
        if not self.terms:
            return self
        p = self.scale(1 / self.content())
        if p.leading_term()[1] < 0:
            p = -p
        return p

    def drop_var(self, var: str) -> "Poly":
        i = self.index(var)
        if any(m[i] for m in self.terms):
            raise ValueError(f"{var} still occurs in {self}")
        vars = self.vars[:i] + self.vars[i + 1:]
        return Poly({m[:i] + m[i + 1:]: c for m, c in self.terms.items()}, vars)

    def with_vars(self, vars: Sequence[str]) -> "Poly":
        """Re-embed into a larger (or reordered) variable tuple."""
        vars = tuple(vars)
        for v in self.vars:
            if v not in vars:
                raise UnknownVariable(f"{v} missing from {vars}")
        pos = [vars.index(v) for v in self.vars]
        out = {}
        for mon, c in self.terms.items():
            new = [0] * len(vars)
            for p, e in zip(pos, mon):
                new[p] = e
            out[tuple(new)] = c
        return Poly(out, vars)

    def evaluate(self, values: Dict[str, object]):
        """Substitute ring elements (Fractions, Polys, series...) for variables."""
        total = None
        for mon, c in self.terms.items():
            term = c
            for v, e in zip(self.vars, mon):
                if e:
                    term = term * values[v] ** e
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    # -- division -------------------------------------------------------------

    def divmod_lex(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """Multivariate division by a single polynomial in lex order."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = other.leading_term()
        quot: Dict[Monomial, Fraction] = {}
        rem: Dict[Monomial, Fraction] = {}
        work = dict(self.terms)
        while work:
            mon = max(work)
            c = work[mon]
            if all(a >= b for a, b in zip(mon, lm)):
                qm = tuple(a - b for a, b in zip(mon, lm))
                qc = c / lc
                quot[qm] = quot.get(qm, 0) + qc
                for m2, c2 in other.terms.items():
                    t = tuple(a + b for a, b in zip(qm, m2))
                    v = work.get(t, 0) - qc * c2
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
            else:
                rem[mon] = c
                del work[mon]
        return self._like(quot), self._like(rem)

    def exquo(self, other: "Poly") -> "Poly":
        q, r = self.divmod_lex(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- text -----------------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, mon) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> Dict[str, str]:
        return {",".join(map(str, m)): str(c) for m, c in self.sorted_terms()}


# -----------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected token {val!r}", pos)
        return p

    def expr(self) -> Poly:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                p = p + rhs if val == "+" else p - rhs
            else:
                return p

    def term(self) -> Poly:
        p = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.unary()
            elif kind == "op" and val == "/":
                self.take()
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise PolySyntaxError("division only by nonzero constants", pos)
                p = p.scale(1 / d.constant_term())
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                p = p * self.power()
            else:
                return p

    def unary(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k2, exp, pos = self.take()
            if k2 != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer", pos)
            return base ** exp
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "num":
            return Poly.constant(val, self.vars)
        if kind == "var":
            if val not in self.vars:
                raise UnknownVariable(f"unknown variable {val!r} at position {pos}")
            return Poly.variable(val, self.vars)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise PolySyntaxError(f"unexpected {'end of input' if kind == 'end' else repr(val)}", pos)


def parse_poly(text: str, vars: Sequence[str] = DEFAULT_VARS) -> Poly:
    """Parse integers, ``a/b``, variables, ``^``, ``*``, ``+``, ``-``, parentheses."""
    return _Parser(text, tuple(vars)).parse()


# -----------------------------------------------------------------------------
# resultants and discriminants

def _bareiss_det(matrix: List[List[object]], zero, one):
    """Fraction-free determinant; entries need +, -, * and exact division."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_div(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, Poly) else v == 0


def _exact_div(a, b):
    if isinstance(a, Poly):
        if isinstance(b, Poly):
            if b.is_constant():
                return a.scale(1 / b.constant_term())
            return a.exquo(b)
        return a.scale(Fraction(1) / b)
    return a / b if isinstance(a, Fraction) or isinstance(b, Fraction) else Fraction(a, b)


def sylvester_matrix(f: Poly, g: Poly, var: str) -> List[List[Poly]]:
    fc = f.coefficients_in(var)[::-1]
    gc = g.coefficients_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    zero = Poly({}, f.vars)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Res_var(f, g) via the Sylvester matrix; returned in the same variables."""
    if f.is_zero() or g.is_zero():
        return Poly({}, f.vars)
    if f.degree(var) == 0 and g.degree(var) == 0:
        return Poly.constant(1, f.vars)
    if f.degree(var) == 0:
        return f ** g.degree(var)
    if g.degree(var) == 0:
        return g ** f.degree(var)
    zero = Poly({}, f.vars)
    one = Poly.constant(1, f.vars)
    return _bareiss_det(sylvester_matrix(f, g, var), zero, one)


def discriminant_wrt(f: Poly, var: str, normalize: bool = True) -> Poly:
    """Discriminant of ``f`` with respect to ``var``, as a polynomial in the other variables.

    ``f`` must be unitary in ``var`` (constant leading coefficient).  With
    ``normalize`` the result is the primitive integer representative with
    positive lex-leading coefficient, since only its zero locus matters.
    """
    n = f.degree(var)
    if n <= 0:
        raise NotUnitary(f"{f} has no positive degree in {var}")
    lead = f.leading_coefficient_in(var)
    if not lead.is_constant():
        raise NotUnitary(f"leading coefficient {lead} in {var} is not constant")
    if n == 1:
        disc = Poly.constant(1, f.vars)
    else:
        res = resultant(f, f.diff(var), var)
        disc = res.scale(Fraction((-1) ** (n * (n - 1) // 2)) / lead.constant_term())
    disc = disc.drop_var(var)
    return disc.normalized() if normalize else disc


# -----------------------------------------------------------------------------
# univariate helpers (coefficient lists, constant term first)

def _trim(p: List[Fraction]) -> List[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = _trim(a)
    return q, a


def upoly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    """Monic gcd over Q (empty list for gcd(0, 0))."""
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def upoly_to_text(p: Sequence[Fraction], var: str = "w") -> str:
    """Coefficient list (constant term first) as text, e.g. ``w^2 - w + 1``."""
    vars_ = (var,)
    return Poly({(k,): Fraction(c) for k, c in enumerate(p) if c}, vars_).to_text()


def upoly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_changes(seq: Sequence[Sequence[Fraction]], x: int) -> int:
    signs = [s for s in (upoly_eval(p, Fraction(x)) for p in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def _integer_roots(h: List[int]) -> List[int]:
    """Integer roots of a squarefree integer polynomial with leading coefficient 1.

    Roots are isolated with a Sturm sequence, so the cost grows with the bit
    size of the coefficients rather than with their number of divisors.
    """
    seq = [[Fraction(c) for c in h]]
    seq.append(_trim([k * c for k, c in enumerate(seq[0])][1:]))
    while len(seq[-1]) > 1:
        r = upoly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    bound = 1 + max(abs(c) for c in h[:-1])
    out: List[int] = []
    stack = [(-bound, bound, _sign_changes(seq, -bound), _sign_changes(seq, bound))]
    while stack:
        a, b, va, vb = stack.pop()
        if va - vb == 0:
            continue
        if b - a == 1:
            # the only integer in (a, b] is b
            if upoly_eval(h, Fraction(b)) == 0:
                out.append(b)
            continue
        mid = (a + b) // 2
        vm = _sign_changes(seq, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    return out


def rational_roots(p: Sequence[Fraction]) -> Tuple[Dict[Fraction, int], List[Fraction]]:
    """Rational roots with multiplicities, plus the cofactor free of rational roots."""
    p = _trim([Fraction(c) for c in p])
    if not p:
        raise ZeroPolynomial("roots of the zero polynomial")
    roots: Dict[Fraction, int] = {}
    while len(p) > 1 and p[0] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        p = p[1:]
    if len(p) > 1:
        deriv = [k * c for k, c in enumerate(p)][1:]
        sq = upoly_divmod(p, upoly_gcd(p, deriv))[0]
        den = lcm(*(c.denominator for c in sq))
        ints = [int(c * den) for c in sq]
        lead, d = ints[-1], len(ints) - 1
        # r is a root of sq iff lead * r is an integer root of this monic polynomial
        h = [c * lead ** (d - 1 - k) for k, c in enumerate(ints[:-1])] + [1]
        for x in sorted(_integer_roots(h)):
            r = Fraction(x, lead)
            while len(p) > 1 and upoly_eval(p, r) == 0:
                p = upoly_divmod(p, [-r, Fraction(1)])[0]
                roots[r] = roots.get(r, 0) + 1
    return roots, p


# -----------------------------------------------------------------------------
# gcd and squarefreeness for polynomials in at most two variables

def _as_nested(f: Poly, main: str) -> List[List[Fraction]]:
    """View f in Q[t][main] where t is the remaining variable (if any)."""
    coeffs = f.coefficients_in(main)
    others = [v for v in f.vars if v != main]
    out = []
    for c in coeffs:
        if not others:
            out.append([c.constant_term()])
            continue
        j = c.index(others[0])
        lst = [Fraction(0)] * (max((m[j] for m in c.terms), default=0) + 1)
        for mon, v in c.terms.items():
            lst[mon[j]] = v
        out.append(_trim(lst))
    return out


def _from_nested(nested: List[List[Fraction]], vars, main: str) -> Poly:
    others = [v for v in vars if v != main]
    i_main = vars.index(main)
    out = {}
    for k, c in enumerate(nested):
        for e, v in enumerate(c):
            if v:
                mon = [0] * len(vars)
                mon[i_main] = k
                if others:
                    mon[vars.index(others[0])] = e
                out[tuple(mon)] = v
    return Poly(out, vars)


def _umul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _usub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _nested_content(p):
    g: List[Fraction] = []
    for c in p:
        g = upoly_gcd(g, c)
    return g


def _nested_divide_content(p, c):
    return [upoly_divmod(x, c)[0] if x else [] for x in p]


def _nested_prem(a, b):
    """Pseudo-remainder of a by b in Q[t][main]."""
    a = [list(c) for c in a]
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        la = a[-1]
        a = [_umul(c, lb) for c in a]
        for i, bc in enumerate(b):
            a[i + shift] = _usub(a[i + shift], _umul(la, bc))
        while a and not a[-1]:
            a.pop()
    return a


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Gcd of polynomials in at most two variables, normalized (primitive, positive)."""
    if f.vars != g.vars or len(f.vars) > 2:
        raise ValueError("poly_gcd supports at most two shared variables")
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    main = f.vars[-1]
    a, b = _as_nested(f, main), _as_nested(g, main)
    ca, cb = _nested_content(a), _nested_content(b)
    content = upoly_gcd(ca, cb)
    a, b = _nested_divide_content(a, ca), _nested_divide_content(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _nested_prem(a, b)
        if not r:
            a, b = b, []
            break
        a, b = b, _nested_divide_content(r, _nested_content(r))
    if b:  # b is a nonzero polynomial free of the main variable: primitive gcd is 1
        a = [[Fraction(1)]]
    else:
        a = _nested_divide_content(a, _nested_content(a))
    result = _from_nested([_umul(c, content) for c in a], f.vars, main)
    return result.normalized()


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, df/dx, df/dy) is constant."""
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    g = f
    for v in f.vars:
        g = poly_gcd(g, f.diff(v))
    return g.is_constant()


# -----------------------------------------------------------------------------
# Newton polygon

@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex boundary of the support of f in the (x-exponent, y-exponent) plane.

    Vertices run left to right from the leftmost-lowest support point down to
    the rightmost point of minimal y-exponent.  Each edge carries its
    inclination di/dj (the exponent gamma of y ~ c*x^gamma), or ``None`` for a
    horizontal edge on the bottom row.
    """

    vertices: Tuple[Tuple[int, int], ...]
    edges: Tuple[Tuple[Tuple[int, int], Tuple[int, int], Optional[Fraction]], ...]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_boundary(points: Iterable[Tuple[int, int]]) -> List[Tuple[int, int]]:
    pts = sorted(set(points))
    if not pts:
        return []
    jmin = min(p[1] for p in pts)
    i_start = pts[0][0]
    start = min(p for p in pts if p[0] == i_start)
    end = max(p for p in pts if p[1] == jmin)
    # keep only points that can lie on the lower-left boundary
    pts = [p for p in pts if start[0] <= p[0] <= end[0] and p[1] <= start[1]]
    hull: List[Tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    # drop vertices before the start (same i, higher j cannot occur) and keep monotone j
    out = [hull[0]]
    for p in hull[1:]:
        if p[1] <= out[-1][1]:
            out.append(p)
    return out


def newton_polygon(f: Poly) -> NewtonPolygon:
    if f.is_zero():
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    if len(f.vars) != 2:
        raise ValueError("Newton polygons are for two-variable polynomials")
    verts = lower_boundary(f.terms.keys())
    edges = []
    for a, b in zip(verts, verts[1:]):
        dj = a[1] - b[1]
        incl = Fraction(b[0] - a[0], dj) if dj else None
        edges.append((a, b, incl))
    return NewtonPolygon(tuple(verts), tuple(edges))
