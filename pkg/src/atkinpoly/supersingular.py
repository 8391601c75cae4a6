"""Number-theoretic cross-check: the degree-n monic polynomial reduced
mod p against the supersingular polynomial computed from scratch.

The supersingular side never touches the recurrence.  For each j in the
quadratic extension field, a curve with that j-invariant is built and its
points counted by a quadratic-character table; the curve is supersingular
exactly when its trace is divisible by p, and twist-independence of that
test means any model with the given j works.  Brute force, O(p^4) per
prime, fine for the supported range.
"""

from __future__ import annotations

import numpy as np

from .atkin import atkin
from .errors import DomainError, InternalError, InvalidPrime
from .fp import Fp2Element, FpPoly
from .ratpoly import reduce_mod_p


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _smallest_nonresidue(p: int) -> int:
    squares = {(i * i) % p for i in range(p)}
    for d in range(2, p):
        if d not in squares:
            return d
    raise InternalError("no quadratic non-residue found for p=%d" % p)


def _supersingular_js(p: int):
    """All supersingular j-invariants in F_{p^2}, as (a, b) pairs with
    j = a + b u, u^2 = d."""
    d = _smallest_nonresidue(p)
    n2 = p * p
    # element index a*p + b
    A, B = np.divmod(np.arange(n2, dtype=np.int64), p)
    sq_idx = ((A * A + d * B * B) % p) * p + (2 * A * B) % p
    chi = -np.ones(n2, dtype=np.int64)
    chi[sq_idx] = 1
    chi[0] = 0
    x2a, x2b = (A * A + d * B * B) % p, (2 * A * B) % p
    x3a, x3b = (x2a * A + d * x2b * B) % p, (x2a * B + x2b * A) % p

    def inv(a, b):
        den = (a * a - d * b * b) % p
        dinv = pow(int(den), p - 2, p)
        return (a * dinv) % p, (-b * dinv) % p

    def mul(a1, b1, a2, b2):
        return (a1 * a2 + d * b1 * b2) % p, (a1 * b2 + b1 * a2) % p

    out = []
    for ja in range(p):
        for jb in range(p):
            if ja == 0 and jb == 0:
                fa, fb = (x3a + 1) % p, x3b
            elif ja == 1728 % p and jb == 0:
                fa, fb = (x3a + A) % p, (x3b + B) % p
            else:
                ia, ib = inv((1728 - ja) % p, (-jb) % p)
                aa, ab = mul(3 * ja % p, 3 * jb % p, ia, ib)
                ba, bb = mul(2 * ja % p, 2 * jb % p, ia, ib)
                fa = (x3a + aa * A + d * ab * B + ba) % p
                fb = (x3b + aa * B + ab * A + bb) % p
            # trace of Frobenius is -sum chi(f(x)); supersingular iff p | trace
            if int(chi[fa * p + fb].sum()) % p == 0:
                out.append((ja, jb))
    return out, d


def ss_poly(p: int) -> FpPoly:
    """Monic squarefree polynomial over F_p with exactly the supersingular
    j-invariants of characteristic p as roots."""
    if p < 5 or not _is_prime(p):
        raise InvalidPrime("p must be a prime >= 5, got %r" % p)
    js, d = _supersingular_js(p)
    one = Fp2Element(p, d, 1, 0)
    coeffs = [one]
    for ja, jb in js:
        root = Fp2Element(p, d, ja, jb)
        shifted = [Fp2Element(p, d, 0, 0)] + coeffs
        coeffs = [
            shifted[i] - (root * coeffs[i] if i < len(coeffs) else Fp2Element(p, d, 0, 0))
            for i in range(len(shifted))
        ]
    for c in coeffs:
        if not c.in_base_field():
            raise InternalError(
                "supersingular product has a coefficient outside F_p at p=%d" % p
            )
    return FpPoly(p, [c.a for c in coeffs])


def atkin_mod_p(n: int, p: int) -> FpPoly:
    """Reduction of the degree-n monic polynomial modulo p."""
    if p < 2 or not _is_prime(p):
        raise InvalidPrime("p must be prime, got %r" % p)
    return reduce_mod_p(atkin(n), p)


def match_report(p_max: int):
    """Per-prime comparison records for 5 <= p <= p_max."""
    if p_max > 200:
        raise DomainError("p_max capped at 200")
    report = []
    for p in range(5, p_max + 1):
        if not _is_prime(p):
            continue
        ss = ss_poly(p)
        n = ss.degree()
        record = {"p": p, "deg_ss": n}
        try:
            reduced = atkin_mod_p(n, p)
        except Exception as exc:  # reduction can fail on denominator collisions
            record["matched"] = None
            record["note"] = "reduction failed: %s" % exc
        else:
            record["matched"] = reduced == ss
        report.append(record)
    return report
