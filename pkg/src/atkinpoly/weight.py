"""The orthogonality weight on (0, 1728): the lambda constant, the angle
map phi and its derivative, the Wronskian consistency check, singular
endpoint quadrature, and moment/Gram checks for the monic family.

The weight has a j^(-2/3) singularity at 0 and a square-root singularity
at 1728.  Tanh-sinh quadrature absorbs both without a change of
variables; the integration interval is split at 864 so each piece owns
one singular endpoint and the node-to-endpoint distances stay exact in
floating point (0 + small is exact on the left piece, and 1728 - j is
exact by Sterbenz for j in [864, 1728] on the right).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atkin import atkin
from .errors import DomainError, InternalInconsistency, NoConvergence
from .hypergeom import f21_near_one, f21_real, gamma_real
from .ratpoly import poly_eval_float

_PI = math.pi
_SQRT3 = math.sqrt(3.0)


def lambda_star() -> float:
    """The weight's normalizing constant, via two gamma-product forms.

    Both forms are evaluated and must agree to 1e-12 relative; the mean
    is returned.
    """
    global _LAMBDA
    if _LAMBDA is not None:
        return _LAMBDA
    g = gamma_real
    form1 = g(2.0 / 3.0) * g(5.0 / 12.0) * g(11.0 / 12.0) / (
        g(4.0 / 3.0) * g(1.0 / 12.0) * g(7.0 / 12.0)
    )
    form2 = (2.0 - _SQRT3) * g(2.0 / 3.0) * g(11.0 / 12.0) ** 2 / (
        g(4.0 / 3.0) * g(7.0 / 12.0) ** 2
    )
    if abs(form1 - form2) > 1e-12 * abs(form1):
        raise InternalInconsistency(
            "gamma-product forms disagree: %r vs %r" % (form1, form2)
        )
    _LAMBDA = 0.5 * (form1 + form2)
    return _LAMBDA


_LAMBDA = None


@dataclass(frozen=True)
class WeightContext:
    lambda_star: float
    quad_tolerance: float = 1e-10
    quad_level_cap: int = 12


_CTX = None


def default_context() -> WeightContext:
    global _CTX
    if _CTX is None:
        lam = lambda_star()
        if not 0.0 < lam < 1.0:
            raise InternalInconsistency("lambda constant out of (0, 1): %r" % lam)
        _CTX = WeightContext(lam)
    return _CTX


def f_and_fstar(J: float):
    """The hypergeometric pair (F, F*) entering the weight, at J in [0, 1]."""
    if not 0.0 <= J <= 1.0:
        raise DomainError("J must lie in [0, 1]")
    f = f21_real(1.0 / 12.0, 1.0 / 12.0, 2.0 / 3.0, J).value
    fs = f21_real(5.0 / 12.0, 5.0 / 12.0, 4.0 / 3.0, J).value
    return f, fs


def _f_pair_dist(J: float, one_minus_J: float):
    # same pair, with the distance to 1 supplied exactly for deep-tail nodes
    if one_minus_J >= 0.5:
        return f_and_fstar(J)
    f = f21_near_one(1.0 / 12.0, 1.0 / 12.0, 2.0 / 3.0, one_minus_J).value
    fs = f21_near_one(5.0 / 12.0, 5.0 / 12.0, 4.0 / 3.0, one_minus_J).value
    return f, fs


def _n_parts(j_cuberoot: float, f: float, fstar: float, lam: float):
    # N = F - lam exp(-i pi/3) J^(1/3) F*; real cube root on [0, 1]
    re = f - 0.5 * lam * j_cuberoot * fstar
    im = 0.5 * _SQRT3 * lam * j_cuberoot * fstar
    return re, im


def phi(J: float) -> float:
    """Angle map on [0, 1], increasing from pi/3 to pi/2."""
    f, fs = f_and_fstar(J)
    re, im = _n_parts(J ** (1.0 / 3.0), f, fs, lambda_star())
    return _PI / 3.0 + 2.0 * math.atan2(im, re)


def phi_prime(J: float) -> float:
    """Derivative of the angle map; positive on (0, 1)."""
    if not 0.0 < J < 1.0:
        raise DomainError("phi_prime requires J in (0, 1)")
    lam = lambda_star()
    f, fs = f_and_fstar(J)
    re, im = _n_parts(J ** (1.0 / 3.0), f, fs, lam)
    return (
        lam
        / _SQRT3
        * J ** (-2.0 / 3.0)
        / math.sqrt(1.0 - J)
        / (re * re + im * im)
    )


def wronskian_residual(J: float) -> float:
    """Residual between the series Wronskian of (F, F*) and its closed form."""
    if not 0.0 < J < 1.0:
        raise DomainError("wronskian_residual requires J in (0, 1)")
    lam = lambda_star()
    f, fs = f_and_fstar(J)
    # contiguous derivatives: (ab/c) 2F1(a+1, b+1; c+1; J)
    fp = (1.0 / 96.0) * f21_real(13.0 / 12.0, 13.0 / 12.0, 5.0 / 3.0, J).value
    fsp = (25.0 / 192.0) * f21_real(17.0 / 12.0, 17.0 / 12.0, 7.0 / 3.0, J).value
    pref = lam / _SQRT3 * J ** (-2.0 / 3.0)
    lhs = pref * (f * fs + 3.0 * J * (f * fsp - fp * fs))
    rhs = pref / math.sqrt(1.0 - J)
    return abs(lhs - rhs)


def _w_core(j: float, dist_right: float) -> float:
    """Weight value with the distance to 1728 supplied exactly.

    Computes the explicit form and the phi-derivative form from one
    shared (F, F*) evaluation and insists they agree; the two routes
    differ by nontrivial constant bookkeeping, so their agreement guards
    the 1728 lambda / pi prefactor.
    """
    lam = lambda_star()
    J = j / 1728.0
    f, fs = _f_pair_dist(J, dist_right / 1728.0)
    # explicit form; 12 F - lam exp(-i pi/3) j^(1/3) F* expanded into parts
    j3 = j ** (1.0 / 3.0)
    re = 12.0 * f - 0.5 * lam * j3 * fs
    im = 0.5 * _SQRT3 * lam * j3 * fs
    w_explicit = (
        1728.0
        * lam
        / _PI
        * j ** (-2.0 / 3.0)
        / math.sqrt(dist_right)
        / (re * re + im * im)
    )
    # change-of-variables route through the angle derivative
    nre, nim = _n_parts(J ** (1.0 / 3.0), f, fs, lam)
    phi_p = (
        lam
        / _SQRT3
        * J ** (-2.0 / 3.0)
        / math.sqrt(dist_right / 1728.0)
        / (nre * nre + nim * nim)
    )
    w_phi = 6.0 / (1728.0 * _PI) * phi_p
    if abs(w_explicit - w_phi) > 1e-9 * abs(w_explicit):
        raise InternalInconsistency(
            "weight routes disagree at j=%r: %r vs %r" % (j, w_explicit, w_phi)
        )
    return w_explicit


def weight_w(j: float) -> float:
    """Normalized orthogonality weight at j in (0, 1728)."""
    if not 0.0 < j < 1728.0:
        raise DomainError("weight requires j in (0, 1728)")
    return _w_core(j, 1728.0 - j)


# ---------------------------------------------------------------------------
# tanh-sinh quadrature

_TMAX = 4.8


def _levels(cap: int):
    # yields (level, h, [t values to add at this level])
    for level in range(cap + 1):
        h = 0.5**level
        if level == 0:
            ts = [k * h for k in range(int(_TMAX / h) + 1)]
        else:
            ts = [k * h for k in range(1, int(_TMAX / h) + 1, 2)]
        yield level, h, ts


def _nodes_for(a: float, b: float, ts):
    """Node records (x, dist_a, dist_b, quad_weight) for +t and -t."""
    r = 0.5 * (b - a)
    out = []
    for t in ts:
        u = 0.5 * _PI * math.sinh(t)
        e = math.exp(-2.0 * u)  # u >= 0 here
        sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e))
        wq = r * 0.5 * _PI * math.cosh(t) * sech2
        near = 2.0 * r * e / (1.0 + e)  # distance from the nearer endpoint
        far = 2.0 * r / (1.0 + e)
        # +t: node near b; -t: mirror near a
        out.append((b - near, far, near, wq))
        if t > 0.0:
            out.append((a + near, near, far, wq))
    return out


def _tanh_sinh_piece(g, a: float, b: float, tol: float, cap: int) -> float:
    """Integrate g over (a, b); g takes (x, dist_a, dist_b)."""
    total = 0.0
    prev = None
    for level, h, ts in _levels(cap):
        part = 0.0
        for x, da, db, wq in _nodes_for(a, b, ts):
            part += wq * g(x, da, db)
        if level == 0:
            total = h * part
        else:
            total = 0.5 * total + h * part
        if level >= 2 and abs(total - prev) <= tol * max(1.0, abs(total)):
            return total
        prev = total
    raise NoConvergence("tanh-sinh level cap reached on (%r, %r)" % (a, b))


_SPLIT = 864.0


def _integrate_sing(g, tol: float) -> float:
    """Integral over (0, 1728) of a distance-aware integrand g(x, d0, d1728)."""
    cap = default_context().quad_level_cap
    left = _tanh_sinh_piece(lambda x, da, db: g(x, da, db + _SPLIT), 0.0, _SPLIT, tol, cap)
    right = _tanh_sinh_piece(lambda x, da, db: g(x, da + _SPLIT, db), _SPLIT, 1728.0, tol, cap)
    return left + right


def quad_integrate(f, tol: float = None) -> float:
    """Integral of f over (0, 1728) by tanh-sinh quadrature.

    Handles integrands with at worst the weight's own endpoint behavior.
    Nodes that round onto 0 or 1728 are dropped; their quadrature weights
    are far below any supported tolerance.
    """
    if tol is None:
        tol = default_context().quad_tolerance

    def g(x, d0, d1728):
        if x <= 0.0 or x >= 1728.0:
            return 0.0
        return f(x)

    return _integrate_sing(g, tol)


_W_CACHE: dict = {}


def _w_cached(x: float, d1728: float) -> float:
    key = (x, d1728)
    v = _W_CACHE.get(key)
    if v is None:
        v = _w_core(x, d1728)
        _W_CACHE[key] = v
    return v


def gram(m: int, n: int, tol: float = None) -> float:
    """Inner product of the degree-m and degree-n monic polynomials
    against the weight."""
    if not (0 <= m <= 8 and 0 <= n <= 8):
        raise DomainError("gram is supported for degrees up to 8")
    if tol is None:
        tol = default_context().quad_tolerance
    pm = atkin(m)
    pn = atkin(n)

    def g(x, d0, d1728):
        return poly_eval_float(pm, x) * poly_eval_float(pn, x) * _w_cached(x, d1728)

    return _integrate_sing(g, tol)
