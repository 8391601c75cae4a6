"""Exact polynomial layer plus the mod-p structures it reduces into."""

import random
from fractions import Fraction as F

import pytest

from atkinpoly.errors import DenominatorNotInvertible, DomainError
from atkinpoly.fp import Fp2Element, FpPoly, fp_divmod, fp_gcd
from atkinpoly.ratpoly import (
    RatPoly,
    affine_substitute,
    poly_eval,
    poly_eval_float,
    reduce_mod_p,
)


def _random_poly(rng, deg):
    return RatPoly(
        tuple(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(deg + 1))
    )


def test_constructors_and_degree():
    assert RatPoly.zero().is_zero()
    assert RatPoly.zero().degree() == -1
    assert RatPoly.one() == RatPoly((1,))
    assert RatPoly.x().degree() == 1
    # trailing zeros are trimmed
    assert RatPoly((1, 2, 0, 0)) == RatPoly((1, 2))
    assert RatPoly((0, 0, 3)).leading_coefficient() == 3


def test_coefficient_out_of_range_is_zero():
    p = RatPoly((5, 7))
    assert p.coefficient(0) == 5
    assert p.coefficient(1) == 7
    assert p.coefficient(9) == 0


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(0)
    for _ in range(25):
        a = _random_poly(rng, rng.randint(0, 5))
        b = _random_poly(rng, rng.randint(0, 5))
        c = _random_poly(rng, rng.randint(0, 5))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == RatPoly.zero()
        x = F(rng.randint(-5, 5), rng.randint(1, 7))
        assert poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x)


def test_scalar_operations():
    p = RatPoly((1, -3, 2))
    assert F(1, 2) * p == RatPoly((F(1, 2), F(-3, 2), 1))
    assert p + 1 == RatPoly((2, -3, 2))
    assert 1 - p == RatPoly((0, 3, -2))


def test_poly_eval_horner_matches_power_sum():
    p = RatPoly((F(1, 3), -2, 0, F(5, 7)))
    x = F(9, 4)
    expected = sum(c * x**k for k, c in enumerate(p.coeffs))
    assert poly_eval(p, x) == expected


def test_poly_eval_float():
    p = RatPoly((1, 0, -1))
    assert abs(poly_eval_float(p, 0.5) - 0.75) < 1e-15


def test_affine_substitute():
    p = RatPoly((0, 0, 1))  # x^2
    q = affine_substitute(p, 2, 3)  # (2x+3)^2
    assert q == RatPoly((9, 12, 4))
    # composition respects evaluation
    assert poly_eval(q, F(5)) == poly_eval(p, 2 * F(5) + 3)
    with pytest.raises(DomainError):
        affine_substitute(p, 0, 1)


def test_reduce_mod_p():
    p = RatPoly((F(1, 2), 3, 1))
    r = reduce_mod_p(p, 5)
    # 1/2 = 3 mod 5
    assert r == FpPoly(5, (3, 3, 1))
    with pytest.raises(DenominatorNotInvertible):
        reduce_mod_p(RatPoly((F(1, 5), 1)), 5)


def test_fp_poly_basics():
    f = FpPoly(7, (8, 1))  # coefficients reduced mod 7
    assert f == FpPoly(7, (1, 1))
    assert hash(f) == hash(FpPoly(7, (1, 1)))
    assert FpPoly(7, (0, 0)).is_zero()
    assert FpPoly(5, (1, 0, 3)).derivative() == FpPoly(5, (0, 1))
    assert FpPoly(5, (1, 2)).monic() == FpPoly(5, (3, 1))


def test_fp_divmod_invariant():
    rng = random.Random(1)
    p = 11
    for _ in range(20):
        f = FpPoly(p, tuple(rng.randrange(p) for _ in range(rng.randint(1, 7))))
        g = FpPoly(p, tuple(rng.randrange(p) for _ in range(rng.randint(1, 5))))
        if g.is_zero():
            continue
        q, r = fp_divmod(f, g)
        assert r.degree() < g.degree() or r.is_zero()
        # rebuild f = q*g + r by schoolbook multiplication
        prod = [0] * (len(q.coeffs) + len(g.coeffs))
        for i, qi in enumerate(q.coeffs):
            for j, gj in enumerate(g.coeffs):
                prod[i + j] = (prod[i + j] + qi * gj) % p
        rebuilt = [0] * max(len(prod), len(r.coeffs))
        for i, v in enumerate(prod):
            rebuilt[i] = v
        for i, v in enumerate(r.coeffs):
            rebuilt[i] = (rebuilt[i] + v) % p
        assert FpPoly(p, tuple(rebuilt)) == f


def test_fp_gcd_known_factor():
    p = 13
    # (x+1)(x+2) and (x+1)(x+5) share exactly x+1
    f = FpPoly(p, (2, 3, 1))
    g = FpPoly(p, (5, 6, 1))
    assert fp_gcd(f, g) == FpPoly(p, (1, 1))


def test_fp2_field_axioms():
    p, d = 11, 7  # 7 is a non-residue mod 11
    rng = random.Random(2)
    for _ in range(20):
        a = Fp2Element(p, d, rng.randrange(p), rng.randrange(p))
        b = Fp2Element(p, d, rng.randrange(p), rng.randrange(p))
        if not b.is_zero():
            assert (a * b) * b.inverse() == a
        if not a.is_zero():
            assert a ** (p * p - 1) == Fp2Element(p, d, 1, 0)
        # Frobenius fixes exactly the base field
        assert (a**p == a) == a.in_base_field()
