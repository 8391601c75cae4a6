"""Exact rational arithmetic primitives.

``Rational`` is an alias for :class:`fractions.Fraction`, which already
provides canonical form (positive denominator, reduced by gcd) after every
operation and raises on division by zero.  On top of it live the
combinatorial helpers used throughout: rising factorials, binomial
coefficients with arbitrary rational upper argument, and Catalan numbers.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def gen_binom(a, k: int) -> Fraction:
    """Binomial coefficient a over k with rational upper argument.

    Equals a(a-1)...(a-k+1)/k!; 1 when k = 0.
    """
    if k < 0:
        raise ValueError("gen_binom requires k >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out / math.factorial(k)


def catalan(n: int) -> int:
    """Catalan number binomial(2n, n)/(n+1)."""
    if n < 0:
        raise ValueError("catalan requires n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def rat_str(q) -> str:
    """Serialize a rational as "num/den" in lowest terms, "num" if integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rational(s: str) -> Fraction:
    """Inverse of rat_str; also accepts plain decimal strings."""
    return Fraction(s)
