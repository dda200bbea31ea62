from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thompsonf.exact import Dyadic, QuadDyadic, log2_quotient, parse_dyadic, parse_quad, sqrt_pow2

from helpers import dyadics


def test_canonical_form():
    d = Dyadic(6, 4)
    assert (d.num, d.exp) == (3, 3)
    assert Dyadic(0, 7) == Dyadic(0)
    assert Dyadic(0, 7).exp == 0
    assert Dyadic(4, 2) == 1
    assert Dyadic(3, -2) == 12


def test_immutable():
    d = Dyadic(1, 1)
    with pytest.raises(AttributeError):
        d.num = 3


def test_arithmetic_examples():
    assert Dyadic(1, 2) + Dyadic(1, 4) == parse_dyadic("5/16")
    assert Dyadic(3, 3) - Dyadic(1, 1) == parse_dyadic("-1/8")
    assert Dyadic(3, 2) * Dyadic(5, 3) == parse_dyadic("15/32")
    assert Dyadic(3, 3).scale(2) == parse_dyadic("3/2")
    assert Dyadic(3).half() == parse_dyadic("3/2")


def test_no_division():
    with pytest.raises(TypeError):
        Dyadic(1) / Dyadic(3)  # noqa: B018


def test_text_round_trip():
    for text in ("0", "1", "-3", "3/8", "1023/1024"):
        assert str(parse_dyadic(text)) == text
    assert parse_dyadic("3/2^3") == parse_dyadic("3/8")
    assert str(parse_dyadic("6/16")) == "3/8"


@pytest.mark.parametrize("bad", ["1/3", "x", "1/0", "", "1/-2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_dyadic(bad)


def test_coerce_rejects_non_dyadic_fraction():
    with pytest.raises(ValueError):
        Dyadic.coerce(Fraction(1, 3))
    assert Dyadic.coerce(Fraction(3, 8)) == Dyadic(3, 3)


def test_log2_quotient():
    assert log2_quotient(Dyadic(1, 1), Dyadic(1, 3)) == 2
    assert log2_quotient(Dyadic(3, 5), Dyadic(3, 2)) == -3
    assert log2_quotient(Dyadic(3), Dyadic(1)) is None
    assert log2_quotient(Dyadic(-1), Dyadic(1)) is None


@given(dyadics(), dyadics())
def test_matches_fraction_arithmetic(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)


@given(dyadics())
def test_hash_consistent_with_int(a):
    if a.exp == 0:
        assert hash(a) == hash(a.num)
    assert hash(a) == hash(parse_dyadic(str(a)))


def test_quad_examples():
    r = QuadDyadic(0, 1)
    assert r * r == 2
    assert sqrt_pow2(3) == QuadDyadic(0, 2)
    assert sqrt_pow2(-1) == QuadDyadic(0, Dyadic(1, 1))
    assert sqrt_pow2(4) == 4
    q = parse_quad("1/4+1/2*sqrt2")
    assert (q.a, q.b) == (Dyadic(1, 2), Dyadic(1, 1))
    assert str(q) == "1/4+1/2*sqrt2"
    assert parse_quad("-sqrt2") == QuadDyadic(0, -1)
    assert parse_quad("-1/2-1/4*sqrt2") == QuadDyadic(Dyadic(-1, 1), Dyadic(-1, 2))
    assert str(QuadDyadic(Dyadic(1, 2), Dyadic(-1, 3))) == "1/4-1/8*sqrt2"


def test_quad_sign():
    assert QuadDyadic(Dyadic(-1, 1), Dyadic(1, 2)).sign() == -1  # -1/2 + sqrt2/4 < 0
    assert QuadDyadic(Dyadic(-1, 2), Dyadic(1, 1)).sign() == 1
    assert QuadDyadic(0, 0).sign() == 0


@given(dyadics(max_exp=6), dyadics(max_exp=6))
def test_quad_text_round_trip(a, b):
    q = QuadDyadic(a, b)
    assert parse_quad(str(q)) == q


@given(dyadics(max_exp=6), dyadics(max_exp=6), dyadics(max_exp=6), dyadics(max_exp=6))
def test_quad_ring_laws(a, b, c, d):
    x, y = QuadDyadic(a, b), QuadDyadic(c, d)
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    # the norm is multiplicative
    n = lambda q: q.a * q.a - (q.b * q.b).scale(1)
    assert n(x * y) == n(x) * n(y)


@given(dyadics(max_exp=6), dyadics(max_exp=6))
def test_quad_sign_matches_norm(a, b):
    q = QuadDyadic(a, b)
    # q * conj(q) = a^2 - 2 b^2 is rational, its sign decides |a| vs |b| sqrt2
    s = q.sign()
    if not q:
        assert s == 0
    else:
        assert s in (1, -1)
        assert (-q).sign() == -s
        assert (q * q).sign() == 1


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_sqrt_pow2_multiplies(j, k):
    assert sqrt_pow2(j) * sqrt_pow2(k) == sqrt_pow2(j + k)
