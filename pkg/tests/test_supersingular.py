"""Reduction check: supersingular loci from point counts against the
Atkin family reduced mod p."""

import pytest

from atkinpoly.errors import DomainError, InvalidPrime
from atkinpoly.fp import FpPoly, fp_gcd
from atkinpoly.supersingular import (
    _supersingular_js,
    atkin_mod_p,
    match_report,
    ss_poly,
)
from atkinpoly.atkin import atkin
from atkinpoly.ratpoly import reduce_mod_p

SMALL_TABLES = {
    5: (0, 1),
    7: (1, 1),
    11: (0, 10, 1),
    13: (8, 1),
}


def test_small_prime_tables():
    for p, coeffs in SMALL_TABLES.items():
        assert ss_poly(p) == FpPoly(p, coeffs)


def test_ss_poly_monic_and_squarefree():
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        f = ss_poly(p)
        assert f.coeffs[-1] == 1
        g = fp_gcd(f, f.derivative())
        assert g.degree() == 0  # distinct roots


def test_degree_tracks_p_over_twelve():
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 71, 97):
        d = ss_poly(p).degree()
        assert p // 12 <= d <= p // 12 + 2


def test_locus_closed_under_conjugation():
    # the j-invariants come in base-field points and conjugate pairs
    for p in (13, 23, 37, 47):
        js, _d = _supersingular_js(p)
        pts = set(js)
        for a, b in pts:
            assert (a, (-b) % p) in pts


def test_invalid_primes_rejected():
    for bad in (2, 3, 4, 9, 15):
        with pytest.raises(InvalidPrime):
            ss_poly(bad)
    with pytest.raises(InvalidPrime):
        atkin_mod_p(3, 6)


def test_atkin_mod_p():
    assert atkin_mod_p(2, 5) == reduce_mod_p(atkin(2), 5)
    assert atkin_mod_p(2, 5) == FpPoly(5, (0, 0, 1))


def test_match_report_small():
    report = match_report(37)
    by_p = {r["p"]: r for r in report}
    assert sorted(by_p) == [5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    for r in report:
        assert r["matched"] is not False
    assert by_p[11]["deg_ss"] == 2


def test_match_report_limit():
    with pytest.raises(DomainError):
        match_report(500)
