"""The Atkin family of monic orthogonal polynomials.

Two scales are maintained: the original family A_n, orthogonal on
(0, 1728), and the normalized family with A_n(1728 y)/1728^n living on
(0, 1).  Both are generated by their three-term recurrences; the
normalized cache is additionally cross-checked coefficient by
coefficient against the affine rescaling of the original one, so a bug
in either recurrence cannot stay silent.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, InternalInconsistency
from .exact import gen_binom, pochhammer
from .ratpoly import RatPoly, affine_substitute

_F = Fraction

# recurrence coefficients of the original scale, valid for index n >= 2
def _orig_shift(n: int) -> Fraction:
    return _F(24 * (144 * n * n - 29), (2 * n + 1) * (2 * n - 1))


def _orig_prod(n: int) -> Fraction:
    return _F(
        36 * (12 * n - 13) * (12 * n - 7) * (12 * n - 5) * (12 * n + 1),
        n * (n - 1) * (2 * n - 1) ** 2,
    )


def _norm_shift(n: int) -> Fraction:
    return _orig_shift(n) / 1728


def _norm_prod(n: int) -> Fraction:
    return _orig_prod(n) / (1728 * 1728)


_SEEDS_ORIGINAL = (
    RatPoly((1,)),
    RatPoly((-720, 1)),
    RatPoly((269280, -1640, 1)),
)
_SEEDS_NORMALIZED = (
    RatPoly((1,)),
    RatPoly((_F(-5, 12), 1)),
    RatPoly((_F(935, 10368), _F(-205, 216), 1)),
)


class AtkinFamily:
    """Append-only polynomial cache for one scale.

    The cache grows sequentially; concurrent reads are safe only after a
    sequential fill.
    """

    def __init__(self, scale: str = "original"):
        if scale not in ("original", "normalized"):
            raise ValueError("scale must be 'original' or 'normalized'")
        self.scale = scale
        if scale == "original":
            self._cache = list(_SEEDS_ORIGINAL)
            self._shift, self._prod = _orig_shift, _orig_prod
        else:
            self._cache = list(_SEEDS_NORMALIZED)
            self._shift, self._prod = _norm_shift, _norm_prod

    def poly(self, n: int) -> RatPoly:
        if n < 0:
            raise DomainError("degree must be nonnegative")
        cache = self._cache
        while len(cache) <= n:
            m = len(cache) - 1  # recurrence index producing degree m+1
            nxt = RatPoly((-self._shift(m), 1)) * cache[m] - self._prod(m) * cache[m - 1]
            cache.append(nxt)
        return cache[n]


_ORIGINAL = AtkinFamily("original")
_NORMALIZED = AtkinFamily("normalized")
_verified_to = 2  # seed degrees checked by construction


def atkin(n: int) -> RatPoly:
    """Monic A_n on the original scale."""
    return _ORIGINAL.poly(n)


def atkin_normalized(n: int) -> RatPoly:
    """Monic normalized polynomial of degree n.

    Every newly cached degree is verified against the rescaled original
    family before being handed out.
    """
    global _verified_to
    p = _NORMALIZED.poly(n)
    while _verified_to < n:
        k = _verified_to + 1
        scaled = affine_substitute(atkin(k), 1728, 0) * _F(1, 1728**k)
        if scaled != _NORMALIZED.poly(k):
            raise InternalInconsistency(
                "normalized recurrence disagrees with rescaling at degree %d" % k
            )
        _verified_to = k
    return p


def atkin_rates(n: int):
    """Birth and death rates of the normalized family, n >= 1."""
    if n < 1:
        raise DomainError("rates are defined for n >= 1")
    lam = (n - _F(1, 12)) * (n + _F(5, 12)) / (2 * n * (2 * n + 1))
    mu = (n - _F(5, 12)) * (n + _F(1, 12)) / (2 * n * (2 * n - 1))
    return lam, mu


def kz_explicit(n: int) -> RatPoly:
    """Normalized polynomial of degree n from the double binomial sum.

    The coefficient of x^(n-i) is a sum over m of signed products of four
    generalized binomials divided by a binomial in 2n-1; evaluated
    exactly, it must reproduce the recurrence output.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        acc = Fraction(0)
        for m in range(i + 1):
            acc += (
                (-1) ** m
                * gen_binom(_F(-1, 12), i - m)
                * gen_binom(_F(-5, 12), i - m)
                * gen_binom(n + _F(1, 12), m)
                * gen_binom(n - _F(7, 12), m)
                / gen_binom(2 * n - 1, m)
            )
        coeffs[n - i] = acc
    return RatPoly(coeffs)


def atkin_at_zero(n: int) -> Fraction:
    """Exact value of the normalized degree-n polynomial at 0, n >= 1."""
    if n < 1:
        raise DomainError("closed form holds for n >= 1")
    m = n - 1
    return (
        (-1) ** m
        * _F(-5, 12)
        * pochhammer(_F(11, 12), m)
        * pochhammer(_F(17, 12), m)
        / math.factorial(2 * m + 1)
    )


def atkin_at_one(n: int) -> Fraction:
    """Exact value of the normalized degree-n polynomial at 1, n >= 1."""
    if n < 1:
        raise DomainError("closed form holds for n >= 1")
    m = n - 1
    return (
        _F(7, 12)
        * pochhammer(_F(11, 12), m)
        * pochhammer(_F(19, 12), m)
        / math.factorial(2 * m + 1)
    )


def atkin_normalized_value_seq(nmax: int, x: float):
    """Float values of the normalized polynomials at x, degrees 0..nmax.

    Runs the three-term recurrence in the value domain.  Unlike Horner on
    the exact coefficients, which cancels catastrophically once the values
    drop toward 4^-n, this stays accurate to a few ulp relative to the
    solution envelope even for degrees in the hundreds.
    """
    if nmax < 0:
        raise DomainError("nmax must be nonnegative")
    out = [1.0]
    if nmax == 0:
        return out
    out.append(x - 5.0 / 12.0)
    if nmax >= 2:
        out.append(x * x - float(_F(205, 216)) * x + float(_F(935, 10368)))
    for m in range(2, nmax):
        nxt = (x - float(_norm_shift(m))) * out[m] - float(_norm_prod(m)) * out[m - 1]
        out.append(nxt)
    return out[: nmax + 1]


def atkin_normalized_value(n: int, x: float) -> float:
    return atkin_normalized_value_seq(n, x)[n]
