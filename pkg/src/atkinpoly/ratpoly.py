"""Dense univariate polynomials over the rationals.

Coefficients are stored ascending by degree with trailing zeros trimmed,
so the zero polynomial is the empty tuple and the leading coefficient of
anything else is nonzero.  All arithmetic is exact; floating evaluation
belongs to the numeric modules.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DenominatorNotInvertible, DomainError
from .fp import FpPoly


class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "RatPoly(%r)" % (list(self.coeffs),)


def _coerce(v) -> RatPoly:
    if isinstance(v, RatPoly):
        return v
    return RatPoly((Fraction(v),))


def poly_eval(p: RatPoly, x) -> Fraction:
    """Exact Horner evaluation."""
    x = Fraction(x)
    out = Fraction(0)
    for c in reversed(p.coeffs):
        out = out * x + c
    return out


def poly_eval_float(p: RatPoly, x: float) -> float:
    """Horner in doubles.  Fine for the small degrees used in quadrature;
    high-degree members of an orthogonal family cancel catastrophically
    here, so large-n evaluation must go through the value recurrences."""
    out = 0.0
    for c in reversed(p.coeffs):
        out = out * x + float(c)
    return out


def affine_substitute(p: RatPoly, a, b) -> RatPoly:
    """Return q with q(x) = p(a*x + b), exactly."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0:
        raise DomainError("degenerate affine substitution: a = 0")
    arg = RatPoly((b, a))
    out = RatPoly(())
    for c in reversed(p.coeffs):
        out = out * arg + c
    return out


def reduce_mod_p(p: RatPoly, prime: int) -> FpPoly:
    """Coefficient-wise image in F_p; requires every denominator invertible."""
    out = []
    for c in p.coeffs:
        if c.denominator % prime == 0:
            raise DenominatorNotInvertible(
                "coefficient %s has denominator divisible by %d" % (c, prime)
            )
        out.append(c.numerator * pow(c.denominator, prime - 2, prime) % prime)
    return FpPoly(prime, out)
