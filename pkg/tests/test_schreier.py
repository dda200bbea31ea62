from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from thompsonf.exact import Dyadic, parse_dyadic
from thompsonf.graph import FrontierError
from thompsonf.monoid import Word, word_to_plhomeo
from thompsonf.plhomeo import HALF, IDENTITY, X0, X1, compose, evaluate, invert, stab_join
from thompsonf.schreier import (
    act_on_tuple,
    dyadic_schreier_graph,
    dyadic_tuple,
    find_transporter,
    folner_ratio,
    folner_set,
    maximality_decompose,
    schreier_distance,
    set_A,
    set_B,
    set_C,
    set_D,
    stab_transporter,
    tuple_orbit_graph,
    verify_dyadic_structure,
    word_length_lower_bound,
)

from helpers import unit_dyadics, words

D = parse_dyadic


def test_sets_from_definitions():
    assert set_A(3) == {D("5/8")}
    assert set_A(4) == {D("9/16"), D("11/16")}
    assert set_B(4) == {D("13/16")}
    assert set_B(5) == {D("25/32"), D("27/32")}
    assert set_C(4) == {D("9/16")}
    assert set_D(4) == {D("11/16")}


def test_orbit_truncation_contains_all_small_dyadics():
    g = dyadic_schreier_graph(max_exp=6)
    for e in range(1, 7):
        for k in range(1, 2 ** e, 2):
            assert Dyadic(k, e) in g


def test_structure_small():
    g = dyadic_schreier_graph(depth=12)
    rep = verify_dyadic_structure(g, 5)
    assert rep.passed, rep.failures


def test_structure_reports_truncation_errors():
    g = dyadic_schreier_graph(depth=3)
    rep = verify_dyadic_structure(g, 6)
    assert not rep.passed
    assert rep.errors


def test_tuple_orbits():
    g1 = tuple_orbit_graph([HALF], depth=4)
    g2 = dyadic_schreier_graph(depth=4)
    assert len(g1) == len(g2)
    pair = dyadic_tuple(["1/4", "1/2"])
    assert act_on_tuple(pair, 1) == pair
    g = tuple_orbit_graph(pair, max_exp=6)
    for e1 in range(1, 5):
        for k1 in range(1, 2 ** e1):
            for e2 in range(1, 5):
                for k2 in range(1, 2 ** e2):
                    a, b = Dyadic(k1, e1), Dyadic(k2, e2)
                    if a < b:
                        assert (a, b) in g
    with pytest.raises(ValueError):
        dyadic_tuple(["1/2", "1/4"])
    with pytest.raises(ValueError):
        dyadic_tuple(["0", "1/4"])


def test_folner_examples():
    assert folner_ratio(10, 2) == Fraction(1, 5)
    assert folner_ratio(2, 3) == 1
    assert folner_ratio(1, 1) == 2
    assert folner_set(2, 3) == (Dyadic(1, 5), Dyadic(1, 4), Dyadic(1, 3))
    for n in (1, 2, 3):
        for i in range(21):
            assert act_on_tuple(folner_set(i, n), 1) == folner_set(i, n)
            assert act_on_tuple(folner_set(i, n), 0) == folner_set(i + 1, n)


def test_transporter_examples():
    assert len(find_transporter("1/2", "1/2")) == 0
    assert find_transporter("1/2", "1/4") == Word.parse("x0")
    assert find_transporter("1/2", "3/4") == Word.parse("x0^-1")
    assert len(find_transporter("1/2", "3/8")) == 3


def test_transporters_up_to_32nds():
    for e in range(1, 6):
        for k in range(1, 2 ** e, 2):
            b = Dyadic(k, e)
            w = find_transporter(HALF, b)
            assert evaluate(word_to_plhomeo(w), HALF) == b


def test_transporter_is_geodesic_in_truncation():
    g = dyadic_schreier_graph(depth=8)
    for b in list(g.explored())[:60]:
        assert len(find_transporter(HALF, b)) == schreier_distance(HALF, b, g)


@given(unit_dyadics(8), unit_dyadics(8))
@settings(max_examples=60, deadline=None)
def test_transporter_sound(a, b):
    w = find_transporter(a, b)
    assert evaluate(word_to_plhomeo(w), a) == b


def test_stab_transporter_examples():
    assert evaluate(stab_transporter("1/4", "1/4"), "1/4") == D("1/4")
    assert stab_transporter("1/4", "1/8") == stab_join(X0, IDENTITY)
    h = stab_transporter("5/8", "3/4")
    assert evaluate(h, HALF) == HALF and evaluate(h, "5/8") == D("3/4")
    with pytest.raises(ValueError):
        stab_transporter("1/4", "3/4")


@pytest.mark.parametrize("g_word", ["", "x0", "x0^-1 x1 x0", "x1 x1", "x0^-1 x0^-1 x1", "x1^-1 x0 x1 x0"])
def test_maximality_decomposition(g_word):
    g = word_to_plhomeo(g_word)
    d = maximality_decompose(X0, g)
    assert evaluate(d.h_tilde, HALF) == HALF
    assert evaluate(d.h, HALF) == HALF
    assert compose(d.h_tilde, d.f_tilde) == g
    if evaluate(g, HALF) != HALF:
        base = invert(X0) if d.base_is_inverse else X0
        assert compose(base, d.h) == d.f_tilde
    for k in range(1, 21):
        t = Dyadic(k, 5)
        assert evaluate(d.f_tilde, evaluate(d.h_tilde, t)) == evaluate(g, t)
    if evaluate(g, HALF) == HALF:
        assert d.h_tilde == g and d.f_tilde == IDENTITY


def test_maximality_requires_moving_half():
    with pytest.raises(ValueError):
        maximality_decompose(X1, X0)


def test_length_bound_examples():
    g = dyadic_schreier_graph(max_exp=10)
    assert word_length_lower_bound(IDENTITY, g) == 0
    assert word_length_lower_bound(X0, g) == 1
    assert word_length_lower_bound(word_to_plhomeo("x1 x1 x0^-1"), g) == 3
    with pytest.raises(FrontierError):
        word_length_lower_bound(word_to_plhomeo("x0 x0 x0 x0 x0 x0"), dyadic_schreier_graph(depth=2))


@given(words)
@settings(max_examples=200, deadline=None)
def test_length_bound_sound(w):
    assert word_length_lower_bound(word_to_plhomeo(w)) <= len(w)
