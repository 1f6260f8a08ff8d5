"""Exact scalar utilities: congruences and Hirzebruch-Jung continued fractions.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator)
and integers are Python ints, so there is no separate bignum layer.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import NonCoprime, NotInvertible, RangeError

Rational = Fraction
HJChain = tuple  # tuple[int, ...], every term >= 2


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise RangeError(f"not a rational number: {text!r}") from exc


def hj_expand(q: int, k: Optional[int] = None) -> HJChain:
    """Hirzebruch-Jung expansion q/k = b1 - 1/(b2 - 1/(... - 1/br)).

    ``hj_expand(1)`` (or ``hj_expand(1, 0)``) is the smooth case and returns
    the empty chain.
    """
    if q == 1 and not k:
        return ()
    if k is None or k <= 0 or k >= q:
        raise RangeError(f"need 1 <= k < q, got q={q}, k={k}")
    if gcd(q, k) != 1:
        raise NonCoprime(f"gcd({q}, {k}) = {gcd(q, k)}")
    terms = []
    while k:
        b = -(-q // k)
        terms.append(b)
        q, k = k, b * k - q
    return tuple(terms)


def check_chain(chain: Iterable[int]) -> HJChain:
    chain = tuple(int(b) for b in chain)
    if any(b < 2 for b in chain):
        raise RangeError(f"chain terms must be >= 2: {list(chain)}")
    return chain


def hj_evaluate(chain: Sequence[int]) -> Optional[Fraction]:
    """Exact value of a chain; ``None`` marks the empty (smooth) chain."""
    chain = check_chain(chain)
    if not chain:
        return None
    # b - 1/(p/q) = (b*p - q)/p; consecutive continuants are coprime
    p, q = chain[-1], 1
    for b in reversed(chain[:-1]):
        p, q = b * p - q, p
    return Fraction(p, q)


def chain_determinant(chain: Sequence[int]) -> int:
    """Continuant of the chain, i.e. |det| of its tridiagonal matrix."""
    prev, cur = 0, 1
    for b in check_chain(chain):
        prev, cur = cur, b * cur - prev
    return cur


def solve_congruence(a: int, c: int, n: int) -> int:
    """The unique k in [0, n) with k*a + c = 0 (mod n)."""
    if n <= 0:
        raise RangeError(f"modulus must be positive, got {n}")
    if gcd(a, n) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {n}")
    if n == 1:
        return 0
    return (-c * pow(a, -1, n)) % n


def int_root(value: int, k: int) -> Optional[int]:
    """Exact integer k-th root of ``value`` or None."""
    if value < 0:
        if k % 2 == 0:
            return None
        r = int_root(-value, k)
        return None if r is None else -r
    if value in (0, 1):
        return value
    lo, hi = 0, 1 << (value.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= value:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** k == value else None


def rational_root(value: Fraction, k: int) -> Optional[Fraction]:
    """Exact rational k-th root (the positive one for even k), or None."""
    num = int_root(value.numerator, k)
    den = int_root(value.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)
