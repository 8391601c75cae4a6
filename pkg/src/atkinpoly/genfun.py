"""Generating-function identities: the summation identity for the
hypergeometric profile, the delta/epsilon algebra it runs on, the
generating functions for the U/Y pair, and the Catalan-weighted Atkin
generating function with its endpoint specializations.

Each check op returns (partial sum, closed form); callers compare.  The
partial sums converge geometrically in |t|, so the default horizons in
the CLI are modest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atkin import atkin_at_one, atkin_at_zero, atkin_normalized_value_seq
from .errors import ComplexBranch, DomainError
from .exact import catalan
from .hypergeom import c_and_d, f21_profile_seq, f21_real, u_and_y_seq


@dataclass(frozen=True)
class DeltaEpsilon:
    t: float
    x: float
    delta: float
    epsilon: float


def delta_eps(t: float, x: float) -> DeltaEpsilon:
    """Roots delta <= epsilon of t y^2 - (1+t) y + x, as a DeltaEpsilon."""
    if t == 0.0:
        raise DomainError("t must be nonzero")
    disc = (1.0 + t) * (1.0 + t) - 4.0 * x * t
    if disc < 0.0:
        raise ComplexBranch("discriminant negative at t=%r, x=%r" % (t, x))
    root = math.sqrt(disc)
    # delta via the conjugate form; avoids cancellation for small x*t
    delta = 2.0 * x / ((1.0 + t) + root)
    epsilon = ((1.0 + t) + root) / (2.0 * t)
    return DeltaEpsilon(t, x, delta, epsilon)


def fjk_check(a: float, b: float, d: float, x: float, t: float, N: int):
    """Partial sum vs closed form of the summation identity

        sum_n (d+a)_n (b)_n / ((a+b+1)_n n!) 2F1(-n-a, n+b; d; x) (-t)^n.
    """
    if not 0.0 < x < 1.0:
        raise DomainError("x must lie in (0, 1)")
    if abs(t) >= 1.0:
        raise DomainError("|t| must be below 1")
    if N < 1:
        raise DomainError("N must be positive")
    if t == 0.0:
        v = f21_real(-a, b, d, x).value
        return v, v
    # 2F1(-n-a, n+b; d; x) is the profile at (a', b') = (b, -a)
    prof = f21_profile_seq(b, -a, d, x, N)
    lhs = 0.0
    coef = 1.0
    for n in range(N + 1):
        lhs += coef * prof[n].value
        coef *= -t * (d + a + n) * (b + n) / ((a + b + 1.0 + n) * (n + 1.0))
    de = delta_eps(t, x)
    if x - t * de.delta <= 0.0:
        raise DomainError("x - t*delta must stay positive")
    rhs = (
        (x - t * de.delta) ** (a + d - b)
        * de.delta**b
        / x ** (a + d)
        * f21_real(-a, b, d, de.delta).value
        * f21_real(a + d, a + 1.0, a + b + 1.0, t * de.delta / x).value
    )
    return lhs, rhs


@dataclass(frozen=True)
class GenUYResult:
    u_partial_sum: float
    u_closed_form: float
    y_partial_sum: float
    y_closed_form: float


def gen_uy_check(params, x: float, t: float, N: int) -> GenUYResult:
    """Generating functions of U_n and Y_n: partial sums vs closed forms."""
    if not 0.0 < x < 1.0:
        raise DomainError("x must lie in (0, 1)")
    if abs(t) >= 1.0:
        raise DomainError("|t| must be below 1")
    af, bf, cf = float(params.alpha), float(params.beta), float(params.c)
    if t == 0.0:
        u0 = f21_real(-cf, af + bf + cf + 1.0, 1.0 + bf, x).value
        y0 = f21_real(-bf - cf, af + cf + 1.0, 1.0 - bf, x).value
        return GenUYResult(u0, u0, y0, y0)
    us, ys = u_and_y_seq(params, x, N)
    lhs_u = lhs_y = 0.0
    coef = 1.0
    for n in range(N + 1):
        lhs_u += coef * us[n].value
        lhs_y += coef * ys[n].value
        coef *= t * (af + bf + cf + 1.0 + n) * (cf + 1.0 + n) / (
            (af + bf + 2.0 * cf + 2.0 + n) * (n + 1.0)
        )
    de = delta_eps(t, x)
    if x - t * de.delta <= 0.0:
        raise DomainError("x - t*delta must stay positive")
    ratio = t * de.delta / x
    rhs_u = (
        de.delta ** (af + bf + cf + 1.0)
        / (x ** (bf + cf + 1.0) * (x - t * de.delta) ** af)
        * f21_real(-cf, af + bf + cf + 1.0, 1.0 + bf, de.delta).value
        * f21_real(bf + cf + 1.0, cf + 1.0, af + bf + 2.0 * cf + 2.0, ratio).value
    )
    rhs_y = (
        de.delta ** (af + cf + 1.0)
        / (x ** (cf + 1.0) * (x - t * de.delta) ** af)
        * f21_real(-bf - cf, af + cf + 1.0, 1.0 - bf, de.delta).value
        * f21_real(cf + 1.0, bf + cf + 1.0, af + bf + 2.0 * cf + 2.0, ratio).value
    )
    return GenUYResult(lhs_u, rhs_u, lhs_y, rhs_y)


def catalan_gen_check(x: float, t: float, N: int):
    """Catalan-weighted Atkin generating function: partial sum vs closed form.

    The direction of the 2/3-power on the second closed-form term is
    (delta/x), pinned numerically: the residual sits at the truncation
    level with it and at O(1) with (x/delta).
    """
    if not 0.0 < x < 1.0:
        raise DomainError("x must lie in (0, 1)")
    if abs(t) >= 1.0:
        raise DomainError("|t| must be below 1")
    if N < 1:
        raise DomainError("N must be positive")
    vals = atkin_normalized_value_seq(N + 1, x)
    lhs = 0.0
    for n in range(N + 1):
        lhs += catalan(n + 1) * vals[n + 1] * t**n
    if t == 0.0:
        delta = x
    else:
        delta = delta_eps(t, x).delta
    if x - t * delta <= 0.0:
        raise DomainError("x - t*delta must stay positive")
    cx, dx = c_and_d(x)
    bracket = (
        cx.value * f21_real(-7.0 / 12.0, 17.0 / 12.0, 1.0 / 3.0, delta).value
        + dx.value
        * (delta / x) ** (2.0 / 3.0)
        * f21_real(1.0 / 12.0, 25.0 / 12.0, 5.0 / 3.0, delta).value
    )
    rhs = (
        delta ** (17.0 / 12.0)
        / (x ** (11.0 / 12.0) * math.sqrt(x - t * delta))
        * f21_real(11.0 / 12.0, 19.0 / 12.0, 3.0, t * delta / x).value
        * bracket
    )
    return lhs, rhs


def gen_at_zero(t: float, N: int):
    """Value of the Catalan-weighted generating function at x = 0.

    Partial sum uses the exact constant terms; the closed form is
    (-5/12) 2F1(11/12, 17/12; 3; t) after the t -> -t flip.
    """
    if abs(t) >= 1.0:
        raise DomainError("|t| must be below 1")
    lhs = 0.0
    for n in range(N + 1):
        lhs += catalan(n + 1) * float(atkin_at_zero(n + 1)) * (-t) ** n
    rhs = -5.0 / 12.0 * f21_real(11.0 / 12.0, 17.0 / 12.0, 3.0, t).value
    return lhs, rhs


def gen_at_one(t: float, N: int):
    """Value of the Catalan-weighted generating function at x = 1."""
    if abs(t) >= 1.0:
        raise DomainError("|t| must be below 1")
    lhs = 0.0
    for n in range(N + 1):
        lhs += catalan(n + 1) * float(atkin_at_one(n + 1)) * t**n
    rhs = 7.0 / 12.0 * f21_real(11.0 / 12.0, 19.0 / 12.0, 3.0, t).value
    return lhs, rhs


def gen_zero_pfaff_residual(t: float) -> float:
    """Residual of the t -> -t flip behind gen_at_zero: the two 2F1 forms
    must agree after the standard argument transformation."""
    if not -0.5 < t < 1.0:
        raise DomainError("t must lie in (-1/2, 1)")
    lhs = f21_real(11.0 / 12.0, 17.0 / 12.0, 3.0, -t).value
    rhs = (1.0 + t) ** (-11.0 / 12.0) * f21_real(
        11.0 / 12.0, 19.0 / 12.0, 3.0, t / (1.0 + t)
    ).value
    return abs(lhs - rhs)
