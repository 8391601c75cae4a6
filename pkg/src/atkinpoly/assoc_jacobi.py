"""Jacobi and associated Jacobi polynomials, plus the representations of
the normalized Atkin polynomials built from them.

Two associated families appear, differing only in how the index-zero
death rate enters the first polynomial: V keeps it, the calligraphic
variant drops it.  Both satisfy the same three-term recurrence from
degree one on.  Four parameter triples (the S constants below) tie these
families to the Atkin polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .atkin import atkin_normalized
from .errors import DomainError, InternalInconsistency, ParameterDegeneracy
from .exact import pochhammer
from .hypergeom import pfq
from .ratpoly import RatPoly, affine_substitute

_F = Fraction


class Variant(Enum):
    V = "V"
    CALV = "calV"


class Representation(Enum):
    REP1 = "Rep1"
    REP2 = "Rep2"
    REP3 = "Rep3"


@dataclass(frozen=True)
class AJParams:
    """Parameter triple (alpha, beta, c) of an associated family."""

    alpha: Fraction
    beta: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "c", Fraction(self.c))


# The four triples with alpha + beta + 2c = 1.  V is the same polynomial
# sequence for all four; the calligraphic variant pairs up by beta.
S_SET = (
    AJParams(_F(-1, 2), _F(-2, 3), _F(13, 12)),
    AJParams(_F(1, 2), _F(-2, 3), _F(7, 12)),
    AJParams(_F(-1, 2), _F(2, 3), _F(5, 12)),
    AJParams(_F(1, 2), _F(2, 3), _F(-1, 12)),
)

_CANONICAL = S_SET[1]


def _coerce_variant(variant) -> Variant:
    if isinstance(variant, Variant):
        return variant
    return Variant(str(variant))


def jacobi_poly(n: int, alpha, beta) -> RatPoly:
    """Classical Jacobi polynomial P_n^{(alpha,beta)} with exact coefficients."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    alpha = _F(alpha)
    beta = _F(beta)
    p0 = RatPoly.one()
    if n == 0:
        return p0
    p1 = RatPoly(((alpha - beta) / 2, (alpha + beta + 2) / 2))
    for m in range(1, n):
        ab = alpha + beta
        den = 2 * (m + 1) * (m + ab + 1) * (2 * m + ab)
        if den == 0:
            raise ParameterDegeneracy("recurrence denominator vanishes at index %d" % m)
        lin = RatPoly(
            (
                (2 * m + ab + 1) * (alpha * alpha - beta * beta) / den,
                (2 * m + ab + 1) * (2 * m + ab) * (2 * m + ab + 2) / den,
            )
        )
        p0, p1 = p1, lin * p1 - (_F(2 * (m + alpha) * (m + beta) * (2 * m + ab + 2)) / den) * p0
    return p1


def monic_jacobi(n: int, alpha, beta) -> RatPoly:
    """Monic Jacobi variant on [0, 1]: n!/(n+alpha+beta+1)_n times P_n(2x-1)."""
    alpha = _F(alpha)
    beta = _F(beta)
    den = pochhammer(n + alpha + beta + 1, n)
    if den == 0:
        raise ParameterDegeneracy("normalization factor vanishes at degree %d" % n)
    p = affine_substitute(jacobi_poly(n, alpha, beta), _F(2), _F(-1))
    return (_F(math.factorial(n)) / den) * p


def aj_rates(params: AJParams, n: int, variant) -> tuple:
    """Birth and death rates (lambda_n, mu_n) of the associated family."""
    variant = _coerce_variant(variant)
    if n < 0:
        raise DomainError("index must be nonnegative")
    a, b, c = params.alpha, params.beta, params.c
    s = 2 * n + 2 * c + a + b
    if (s + 1) * (s + 2) == 0:
        raise ParameterDegeneracy("lambda denominator vanishes at index %d" % n)
    lam = (n + c + b + 1) * (n + c + a + b + 1) / ((s + 1) * (s + 2))
    if n == 0:
        if variant is Variant.CALV:
            return lam, _F(0)
        if s * (s + 1) == 0:
            raise ParameterDegeneracy("mu denominator vanishes at index 0")
        return lam, c * (c + a) / (s * (s + 1))
    if s * (s + 1) == 0:
        raise ParameterDegeneracy("mu denominator vanishes at index %d" % n)
    return lam, (n + c) * (n + c + a) / (s * (s + 1))


def _vrec_shift(params: AJParams, n: int) -> Fraction:
    a, b, c = params.alpha, params.beta, params.c
    s = 2 * n + 2 * c + a + b
    return (s * (s + 2) - (a * a - b * b)) / (2 * s * (s + 2))


def _vrec_prod(params: AJParams, n: int) -> Fraction:
    a, b, c = params.alpha, params.beta, params.c
    s = 2 * n + 2 * c + a + b
    return (n + c) * (n + c + a) * (n + c + b) * (n + c + a + b) / ((s - 1) * s * s * (s + 1))


def _check_recurrence_range(params: AJParams, nmax: int):
    # fail fast with the offending index, before any polynomial is built
    a, b, c = params.alpha, params.beta, params.c
    for m in range(1, nmax):
        s = 2 * m + 2 * c + a + b
        if (s - 1) * s * (s + 1) * (s + 2) == 0:
            raise ParameterDegeneracy("recurrence denominator vanishes at index %d" % m)


_FAMILY_CACHE: dict = {}


def _assoc_family(params: AJParams, variant: Variant, n: int) -> list:
    key = (params.alpha, params.beta, params.c, variant)
    polys = _FAMILY_CACHE.setdefault(key, [])
    if not polys:
        lam0, mu0 = aj_rates(params, 0, variant)
        polys.append(RatPoly.one())
        polys.append(RatPoly((-(lam0 + mu0), 1)))
    if len(polys) <= n:
        _check_recurrence_range(params, n)
    while len(polys) <= n:
        m = len(polys) - 1
        shift = _vrec_shift(params, m)
        prod = _vrec_prod(params, m)
        polys.append(RatPoly((-shift, 1)) * polys[m] - prod * polys[m - 1])
    return polys


def assoc_V(n: int, params: AJParams) -> RatPoly:
    """Monic associated polynomial V_n, index-zero death rate included."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    return _assoc_family(params, Variant.V, n)[n]


def assoc_calV(n: int, params: AJParams) -> RatPoly:
    """Monic associated polynomial with the index-zero death rate dropped."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    return _assoc_family(params, Variant.CALV, n)[n]


def _explicit_pref(n: int, params: AJParams) -> Fraction:
    a, b, c = params.alpha, params.beta, params.c
    den = pochhammer(a + b + 2 * c + n + 1, n) * math.factorial(n)
    if den == 0:
        raise ParameterDegeneracy("prefactor denominator vanishes at degree %d" % n)
    return _F(-1) ** n * pochhammer(c + 1, n) * pochhammer(b + c + 1, n) / den


def _explicit_coeff(n: int, k: int, params: AJParams) -> Fraction:
    a, b, c = params.alpha, params.beta, params.c
    den = pochhammer(c + 1, k) * pochhammer(c + b + 1, k)
    if den == 0:
        raise ParameterDegeneracy("coefficient denominator vanishes at power %d" % k)
    return pochhammer(_F(-n), k) * pochhammer(n + 2 * c + a + b + 1, k) / den


def wimp_V_explicit(n: int, params: AJParams) -> RatPoly:
    """Explicit double-sum form of assoc_V: one terminating 4F3 per power of x."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    a, b, c = params.alpha, params.beta, params.c
    pref = _explicit_pref(n, params)
    coeffs = []
    for k in range(n + 1):
        f43 = pfq(
            (_F(k - n), n + k + a + b + 2 * c + 1, c + b, c),
            (k + b + c + 1, k + c + 1, a + b + 2 * c),
            1,
        )
        coeffs.append(pref * _explicit_coeff(n, k, params) * f43)
    return RatPoly(coeffs)


def im_calV_explicit(n: int, params: AJParams) -> RatPoly:
    """Explicit double-sum form of assoc_calV.

    Same outer structure as wimp_V_explicit; two inner parameters move up
    by one, which is exactly what dropping the index-zero death rate does
    to the series.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    a, b, c = params.alpha, params.beta, params.c
    pref = _explicit_pref(n, params)
    coeffs = []
    for k in range(n + 1):
        f43 = pfq(
            (_F(k - n), n + k + a + b + 2 * c + 1, c + b + 1, c),
            (k + b + c + 1, k + c + 1, a + b + 2 * c + 1),
            1,
        )
        coeffs.append(pref * _explicit_coeff(n, k, params) * f43)
    return RatPoly(coeffs)


REP1_DEFAULT_COEFF = _F(455, 3456)

_REP2_PARAMS = S_SET[2]


def atkin_via_representation(n: int, which, rep1_coeff=None) -> RatPoly:
    """Degree-(n+1) monic polynomial from one of the three representations.

    All three are intended to reproduce the normalized Atkin polynomial
    of degree n+1.  The first one multiplies V_{n-1} at shifted c+1 by a
    scalar; the default 455/3456 is forced by the n = 1 constant term
    (the value 91/384 that also circulates fails there, which is why the
    scalar stays configurable).
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    which = which if isinstance(which, Representation) else Representation(str(which))
    if which is Representation.REP1:
        kappa = REP1_DEFAULT_COEFF if rep1_coeff is None else _F(rep1_coeff)
        out = RatPoly((_F(-5, 12), 1)) * assoc_V(n, _CANONICAL)
        if n >= 1:
            shifted = AJParams(_CANONICAL.alpha, _CANONICAL.beta, _CANONICAL.c + 1)
            out = out - kappa * assoc_V(n - 1, shifted)
        return out
    if rep1_coeff is not None:
        raise DomainError("rep1_coeff only applies to the first representation")
    if which is Representation.REP2:
        return (
            RatPoly((_F(-8), 1)) * assoc_V(n, _REP2_PARAMS)
            + _F(91, 12) * assoc_calV(n, _REP2_PARAMS)
        )
    return RatPoly((0, 1)) * assoc_V(n, _CANONICAL) - _F(5, 12) * assoc_calV(n, _CANONICAL)


def rep1_solved_coeff(n: int) -> Fraction:
    """The scalar that makes the first representation exact at degree n+1.

    Diagnostic: solves for the coefficient of V_{n-1}(x; c+1) by matching
    against the recurrence-built Atkin polynomial, then checks that the
    whole difference really is that single multiple.
    """
    if n < 1:
        raise DomainError("the scalar only enters for n >= 1")
    diff = RatPoly((_F(-5, 12), 1)) * assoc_V(n, _CANONICAL) - atkin_normalized(n + 1)
    shifted = AJParams(_CANONICAL.alpha, _CANONICAL.beta, _CANONICAL.c + 1)
    w = assoc_V(n - 1, shifted)
    kappa = diff.coefficient(n - 1)  # w is monic of degree n-1
    if diff != kappa * w:
        raise InternalInconsistency(
            "difference at n=%d is not a scalar multiple of the shifted polynomial" % n
        )
    return kappa


def ourrep_explicit(n: int) -> RatPoly:
    """Explicit hypergeometric form of the normalized Atkin polynomial of
    degree n+1.

    The constant term is a terminating 3F2 carrying an overall factor
    -5/12; the power-(k+1) coefficients combine two terminating 4F3
    values with weights 6/5 and -1/5.  Dropping the -5/12 already breaks
    the n = 0 case, whose value must be x - 5/12.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n == 0:
        pref = _F(1)
    else:
        pref = (
            pochhammer(_F(19, 12), n)
            * pochhammer(_F(11, 12), n)
            / (pochhammer(_F(n + 2), n) * pochhammer(_F(-n), n))
        )
    const = _F(-5, 12) * pfq((_F(-n), _F(n + 2), _F(7, 12)), (_F(19, 12), _F(2)), 1)
    coeffs = [pref * const]
    for k in range(n + 1):
        ck = (
            pochhammer(_F(-n), k)
            * pochhammer(_F(n + 2), k)
            / (pochhammer(_F(19, 12), k) * pochhammer(_F(11, 12), k))
        )
        f1 = pfq(
            (_F(k - n), _F(n + k + 2), _F(11, 12), _F(-5, 12)),
            (k + _F(11, 12), k + _F(19, 12), _F(1)),
            1,
        )
        f2 = pfq(
            (_F(k - n), _F(n + k + 2), _F(-1, 12), _F(-5, 12)),
            (k + _F(11, 12), k + _F(19, 12), _F(1)),
            1,
        )
        coeffs.append(pref * ck * (_F(6, 5) * f1 - _F(1, 5) * f2))
    return RatPoly(coeffs)
