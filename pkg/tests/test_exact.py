import math
from fractions import Fraction as F

import pytest

from atkinpoly.exact import catalan, gen_binom, parse_rational, pochhammer, rat_str


def test_pochhammer_base_cases():
    assert pochhammer(F(5, 7), 0) == 1
    assert pochhammer(F(5, 7), 1) == F(5, 7)
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6


def test_pochhammer_recurrence():
    a = F(-11, 12)
    for n in range(1, 20):
        assert pochhammer(a, n) == pochhammer(a, n - 1) * (a + n - 1)


def test_pochhammer_hits_zero_at_negative_integer():
    assert pochhammer(-3, 4) == 0
    assert pochhammer(-3, 3) == -6


def test_pochhammer_rejects_negative_length():
    with pytest.raises(ValueError):
        pochhammer(F(1, 2), -1)


def test_gen_binom_matches_integer_binomials():
    for n in range(8):
        for k in range(n + 1):
            assert gen_binom(n, k) == math.comb(n, k)


def test_gen_binom_fractional():
    assert gen_binom(F(1, 2), 2) == F(-1, 8)
    assert gen_binom(F(-1, 12), 0) == 1
    # reflection (a over k) = (-1)^k (k-a-1 over k)
    a = F(-5, 12)
    for k in range(6):
        assert gen_binom(a, k) == (-1) ** k * gen_binom(k - a - 1, k)


def test_catalan_sequence():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_rat_str_round_trip():
    for q in (F(3, 7), F(-5, 12), F(4), F(0), F(-9)):
        assert parse_rational(rat_str(q)) == q


def test_rat_str_canonical():
    assert rat_str(F(-5, 12)) == "-5/12"
    assert rat_str(F(6, 3)) == "2"
    assert rat_str(0) == "0"


def test_parse_rational_rejects_junk():
    for bad in ("", "a/b", "1.5/2"):
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")
