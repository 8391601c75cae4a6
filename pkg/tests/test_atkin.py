"""Atkin family: printed tables, recurrence structure, explicit form,
endpoint values, pointwise evaluation, and root interlacing."""

import math
from fractions import Fraction as F

import pytest

from atkinpoly.atkin import (
    atkin,
    atkin_at_one,
    atkin_at_zero,
    atkin_normalized,
    atkin_normalized_value,
    atkin_normalized_value_seq,
    atkin_rates,
    kz_explicit,
)
from atkinpoly.errors import DomainError
from atkinpoly.ratpoly import RatPoly, affine_substitute, poly_eval


def test_original_tables():
    assert atkin(0) == RatPoly((1,))
    assert atkin(1) == RatPoly((-720, 1))
    assert atkin(2) == RatPoly((269280, -1640, 1))


def test_normalized_tables():
    assert atkin_normalized(1) == RatPoly((F(-5, 12), 1))
    assert atkin_normalized(2) == RatPoly((F(935, 10368), F(-205, 216), 1))
    assert atkin_normalized(3) == RatPoly(
        (F(-124729, 5971968), F(28277, 55296), F(-131, 90), 1)
    )


def test_monic_and_degree():
    for n in range(26):
        p = atkin(n)
        assert p.degree() == n
        assert p.leading_coefficient() == 1
        assert atkin_normalized(n).leading_coefficient() == 1


def test_normalized_is_rescaled_original():
    for n in range(12):
        scaled = affine_substitute(atkin(n), 1728, 0) * F(1, 1728**n)
        assert scaled == atkin_normalized(n)


def test_rates_values():
    lam, mu = atkin_rates(1)
    assert lam == F(187, 864)
    assert mu == F(91, 288)
    assert lam + mu == F(115, 216)
    with pytest.raises(DomainError):
        atkin_rates(0)


def test_rates_positive_and_bounded():
    # both rates stay in (0, 1/2) and their sum below 1
    for n in range(1, 40):
        lam, mu = atkin_rates(n)
        assert 0 < lam < F(1, 2)
        assert 0 < mu < F(1, 2)
        assert lam + mu < 1


def test_rates_generate_the_recurrence():
    """shift_n = lambda_n + mu_n and prod_n = lambda_{n-1} mu_n rebuild
    the normalized three-term recurrence exactly."""
    for n in range(2, 16):
        lam, mu = atkin_rates(n)
        lam_prev = atkin_rates(n - 1)[0]
        rhs = (
            RatPoly((-(lam + mu), 1)) * atkin_normalized(n)
            - lam_prev * mu * atkin_normalized(n - 1)
        )
        assert rhs == atkin_normalized(n + 1)


def test_double_binomial_form():
    for n in range(21):
        assert kz_explicit(n) == atkin_normalized(n)


def test_endpoint_values_match_polynomials():
    for n in range(1, 31):
        p = atkin_normalized(n)
        assert poly_eval(p, F(0)) == atkin_at_zero(n)
        assert poly_eval(p, F(1)) == atkin_at_one(n)


def test_endpoint_values_printed():
    assert atkin_at_zero(1) == F(-5, 12)
    assert atkin_at_one(2) == F(1463, 10368)


def test_endpoint_signs():
    # value at 0 alternates, value at 1 stays positive
    for n in range(1, 25):
        assert (atkin_at_zero(n) > 0) == (n % 2 == 0)
        assert atkin_at_one(n) > 0


def test_value_seq_matches_exact_recurrence():
    """Float value recurrence at x = 7/10 against the same recurrence run
    in exact arithmetic, out to degree 201."""
    xq = F(7, 10)
    vals = atkin_normalized_value_seq(201, 0.7)
    vprev, vcur = F(1), xq - F(5, 12)
    for n in range(1, 201):
        lam, mu = atkin_rates(n)
        prod = F(455, 3456) if n == 1 else atkin_rates(n - 1)[0] * mu
        vprev, vcur = vcur, (xq - (lam + mu)) * vcur - prod * vprev
    assert abs(vals[201] - float(vcur)) <= 1e-12 * abs(float(vcur))


def test_value_seq_agrees_with_polynomials():
    for x in (0.1, 0.5, 0.9):
        vals = atkin_normalized_value_seq(8, x)
        for n in range(9):
            exact = float(poly_eval(atkin_normalized(n), F(x)))
            assert abs(vals[n] - exact) < 1e-9 * max(1.0, abs(exact))
    assert atkin_normalized_value(3, 0.5) == atkin_normalized_value_seq(3, 0.5)[3]


def _exact_roots(p, grid=2048):
    """All roots of p in (0, 1), found by exact sign changes on a grid and
    bisection in rational arithmetic down to width 1e-9.  Float evaluation
    is useless here: adjacent roots at degree 12 sit closer than the noise
    of a float Horner pass."""
    roots = []
    prev_x = F(0)
    v0 = poly_eval(p, prev_x)
    prev_s = 1 if v0 > 0 else -1
    for k in range(1, grid + 1):
        xk = F(k, grid)
        v = poly_eval(p, xk)
        s = 1 if v > 0 else (-1 if v < 0 else 0)
        if s == 0:
            roots.append(xk)
            prev_x, prev_s = xk, -prev_s
            continue
        if s != prev_s:
            lo, hi, slo = prev_x, xk, prev_s
            while hi - lo > F(1, 10**9):
                mid = (lo + hi) / 2
                vm = poly_eval(p, mid)
                if vm == 0:
                    lo = hi = mid
                    break
                if (1 if vm > 0 else -1) == slo:
                    lo = mid
                else:
                    hi = mid
            roots.append((lo + hi) / 2)
        prev_x, prev_s = xk, s
    return roots


def test_roots_real_simple_interlacing():
    prev = None
    for n in range(1, 13):
        roots = _exact_roots(atkin_normalized(n))
        assert len(roots) == n  # all roots real, simple, inside (0, 1)
        if prev is not None:
            for i in range(n - 1):
                assert roots[i] < prev[i] < roots[i + 1]
        prev = roots


def test_degree_validation():
    with pytest.raises(DomainError):
        atkin(-1)
    with pytest.raises(DomainError):
        atkin_at_zero(0)
