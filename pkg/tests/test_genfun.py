"""Generating functions: the algebraic substitution, the summation
identity, the two solution-family series, and the Catalan-weighted series
with its endpoint specializations."""

import math
import random
from fractions import Fraction as F

import pytest

from atkinpoly.assoc_jacobi import S_SET
from atkinpoly.atkin import atkin_at_one, atkin_at_zero
from atkinpoly.errors import ComplexBranch, DomainError
from atkinpoly.exact import catalan, pochhammer
from atkinpoly.genfun import (
    catalan_gen_check,
    delta_eps,
    fjk_check,
    gen_at_one,
    gen_at_zero,
    gen_uy_check,
    gen_zero_pfaff_residual,
)
from atkinpoly.hypergeom import f21_real

CANON = S_SET[1]


def test_delta_eps_algebraic_relations():
    rng = random.Random(0)
    for _ in range(25):
        t = rng.uniform(0.05, 0.95)
        x = rng.uniform(0.05, 0.95)
        de = delta_eps(t, x)
        # both roots of t z^2 - (1+t) z + x
        for z in (de.delta, de.epsilon):
            assert abs(t * z * z - (1 + t) * z + x) <= 1e-12
        assert abs(de.delta * de.epsilon - x / t) <= 1e-12 * (x / t)
        # delta is the root that stays inside (0, 1)
        assert 0.0 < de.delta < 1.0
        assert de.epsilon > 1.0


def test_delta_eps_small_t_limit():
    de = delta_eps(1e-9, 0.4)
    assert abs(de.delta - 0.4) <= 1e-8


def test_delta_eps_domain():
    with pytest.raises(DomainError):
        delta_eps(0.0, 0.4)
    with pytest.raises(ComplexBranch):
        delta_eps(0.5, 1.2)


def test_fjk_identity_at_reference_point():
    lhs, rhs = fjk_check(0.3, 1.1, 0.9, 0.25, 0.2, 60)
    assert abs(lhs - rhs) <= 1e-10


def test_fjk_truncation_error_decreases():
    args = (0.3, 1.1, 0.9, 0.25, 0.2)
    res = {}
    for N in (10, 60):
        lhs, rhs = fjk_check(*args, N)
        res[N] = abs(lhs - rhs)
    # deeper truncation can only help, up to the float floor
    assert res[60] <= res[10] + 1e-12
    assert res[60] <= 1e-10


def test_fjk_degenerate_t():
    lhs, rhs = fjk_check(0.3, 1.1, 0.9, 0.25, 0.0, 10)
    direct = f21_real(-0.3, 1.1, 0.9, 0.25).value
    assert lhs == rhs
    assert abs(lhs - direct) <= 1e-12


def test_uy_generating_functions():
    for x, t in ((0.25, 0.2), (0.6, 0.1)):
        r = gen_uy_check(CANON, x, t, 50)
        assert abs(r.u_partial_sum - r.u_closed_form) <= 1e-10
        assert abs(r.y_partial_sum - r.y_closed_form) <= 1e-10


def test_uy_series_coefficient_shape():
    """The shared series coefficient is a ratio of rising factorials; spot
    check that truncating one term earlier moves the sum by exactly the
    dropped term's size."""
    x, t, N = 0.3, 0.15, 30
    full = gen_uy_check(CANON, x, t, N)
    one_less = gen_uy_check(CANON, x, t, N - 1)
    assert abs(full.u_closed_form - one_less.u_closed_form) == 0.0
    assert abs(full.u_partial_sum - one_less.u_partial_sum) <= abs(t) ** (N - 1)


def test_catalan_weighted_generating_function():
    for x, t in ((0.3, 0.2), (0.7, 0.1)):
        lhs, rhs = catalan_gen_check(x, t, 50)
        assert abs(lhs - rhs) <= 1e-8


def test_catalan_truncation_regime():
    # with the horizon in the truncation-dominated range the residual
    # falls by far more than two orders of magnitude
    r5 = abs(catalan_gen_check(0.3, 0.2, 5)[0] - catalan_gen_check(0.3, 0.2, 5)[1])
    r12 = abs(catalan_gen_check(0.3, 0.2, 12)[0] - catalan_gen_check(0.3, 0.2, 12)[1])
    assert r12 > 1e-12  # still above the float floor
    assert r5 / r12 >= 100.0


def test_catalan_degenerate_t():
    lhs, rhs = catalan_gen_check(0.35, 0.0, 5)
    # at t = 0 the substitution collapses and both sides are x - 5/12
    assert abs(lhs - (0.35 - 5.0 / 12.0)) <= 1e-15
    assert abs(rhs - (0.35 - 5.0 / 12.0)) <= 1e-12


def test_endpoint_series_zero():
    lhs, rhs = gen_at_zero(0.15, 40)
    assert abs(lhs - rhs) <= 1e-10
    with pytest.raises(DomainError):
        gen_at_zero(1.0, 10)


def test_endpoint_series_one():
    lhs, rhs = gen_at_one(0.15, 40)
    assert abs(lhs - rhs) <= 1e-10


def test_endpoint_coefficient_identities():
    """Catalan number times endpoint value equals the series coefficient
    of the closed form, exactly, for the first 21 coefficients."""
    for n in range(21):
        lhs0 = catalan(n + 1) * atkin_at_zero(n + 1) * F(-1) ** n
        rhs0 = (
            F(-5, 12)
            * pochhammer(F(11, 12), n)
            * pochhammer(F(17, 12), n)
            / (pochhammer(F(3), n) * math.factorial(n))
        )
        assert lhs0 == rhs0
        lhs1 = catalan(n + 1) * atkin_at_one(n + 1)
        rhs1 = (
            F(7, 12)
            * pochhammer(F(11, 12), n)
            * pochhammer(F(19, 12), n)
            / (pochhammer(F(3), n) * math.factorial(n))
        )
        assert lhs1 == rhs1


def test_argument_flip_consistency():
    for t in (0.1, 0.4, 0.8):
        assert gen_zero_pfaff_residual(t) <= 1e-11
    with pytest.raises(DomainError):
        gen_zero_pfaff_residual(-0.6)
