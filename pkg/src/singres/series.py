"""Truncated power series in one variable with exact rational coefficients.

``Series(coeffs, prec)`` knows the coefficients of t^0 .. t^(prec-1); an
exact series (``prec is None``) is a polynomial whose omitted tail is zero.
Any question whose answer depends on unknown coefficients raises
:class:`TruncationInsufficient`.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from .errors import TruncationInsufficient

INF = float("inf")


class Series:
    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Iterable = (), prec: Optional[int] = None):
        cs = [Fraction(c) for c in coeffs]
        if prec is not None:
            prec = max(int(prec), 0)
            cs = cs[:prec]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: List[Fraction] = cs
        self.prec = prec

    @classmethod
    def from_dict(cls, terms: Dict[int, Fraction], prec: Optional[int] = None) -> "Series":
        if not terms:
            return cls((), prec)
        top = max(terms)
        cs = [Fraction(0)] * (top + 1)
        for k, v in terms.items():
            cs[k] = Fraction(v)
        return cls(cs, prec)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Series":
        return cls([0] * k + [c])

    @property
    def exact(self) -> bool:
        return self.prec is None

    def _prec(self):
        return INF if self.prec is None else self.prec

    def coeff(self, k: int) -> Fraction:
        if self.prec is not None and k >= self.prec:
            raise TruncationInsufficient(f"coefficient of t^{k} unknown (precision {self.prec})")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def low(self):
        """Index of the first known nonzero coefficient, else the precision (inf if exact zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self._prec()

    def valuation(self):
        """Order in t; ``INF`` for the exact zero series."""
        v = self.low()
        if v == self._prec() and self.prec is not None:
            raise TruncationInsufficient(f"series vanishes to known precision {self.prec}")
        return v

    def is_exact_zero(self) -> bool:
        return self.prec is None and not self.coeffs

    def terms(self) -> Dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def __repr__(self):
        body = " + ".join(f"{c}*t^{k}" for k, c in self.terms().items()) or "0"
        return f"Series({body}{'' if self.exact else f' + O(t^{self.prec})'})"

    def __eq__(self, other):
        return isinstance(other, Series) and self.coeffs == other.coeffs and self.prec == other.prec

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _wrap(other):
        if isinstance(other, Series):
            return other
        return Series([other])

    def _combine_prec(self, other):
        p = min(self._prec(), other._prec())
        return None if p == INF else p

    def __add__(self, other):
        other = self._wrap(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [Fraction(0)] * (n - len(self.coeffs))
        b = other.coeffs + [Fraction(0)] * (n - len(other.coeffs))
        return Series([x + y for x, y in zip(a, b)], self._combine_prec(other))

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        pa, pb = self._prec(), other._prec()
        va, vb = self.low(), other.low()
        p = min(pa + vb, pb + va)
        if p == INF:
            p = None
        limit = len(self.coeffs) + len(other.coeffs) if p is None else p
        if limit <= 0:
            return Series((), p)
        out = [Fraction(0)] * max(min(limit, len(self.coeffs) + len(other.coeffs) - 1), 0)
        for i, x in enumerate(self.coeffs):
            if not x or i >= len(out):
                continue
            for j, y in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                if y:
                    out[i + j] += x * y
        return Series(out, p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Series([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, prec: int) -> "Series":
        if self.prec is not None and self.prec <= prec:
            return self
        return Series(self.coeffs, prec)

    def shift(self, k: int) -> "Series":
        """Divide by t^k; the first k coefficients must vanish."""
        if k == 0:
            return self
        for i in range(min(k, len(self.coeffs))):
            if self.coeffs[i]:
                raise ArithmeticError(f"t^{k} does not divide the series")
        if self.prec is not None and self.prec < k:
            raise TruncationInsufficient(f"cannot divide by t^{k} at precision {self.prec}")
        return Series(self.coeffs[k:], None if self.prec is None else self.prec - k)

    def substitute_power(self, k: int) -> "Series":
        """Series in t^k (t -> t^k)."""
        out = [Fraction(0)] * (len(self.coeffs) - 1) * k + [Fraction(0)] if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Series(out, None if self.prec is None else self.prec * k)

    def inverse(self, cap: int) -> "Series":
        """Inverse of a unit; exact only if the unit is a constant."""
        c0 = self.coeff(0)
        if c0 == 0:
            raise ZeroDivisionError("series is not a unit")
        if self.exact and len(self.coeffs) == 1:
            return Series([1 / c0])
        prec = cap if self.prec is None else min(self.prec, cap)
        inv = [Fraction(0)] * prec
        if prec:
            inv[0] = 1 / c0
        for n in range(1, prec):
            acc = Fraction(0)
            for k in range(1, min(n, len(self.coeffs) - 1) + 1):
                acc += self.coeffs[k] * inv[n - k]
            inv[n] = -acc / c0
        return Series(inv, prec)

    def divide(self, other: "Series", cap: int) -> "Series":
        """self / other, where other = t^v * unit and t^v divides self."""
        v = other.valuation()
        return self.shift(v) * other.shift(v).inverse(cap)
