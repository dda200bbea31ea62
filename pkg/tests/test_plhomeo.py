import pytest
from hypothesis import given, settings, strategies as st

from thompsonf.exact import Dyadic, parse_dyadic
from thompsonf.monoid import word_to_plhomeo
from thompsonf.plhomeo import (
    HALF,
    IDENTITY,
    X0,
    X1,
    PLHomeo,
    compose,
    evaluate,
    generator,
    generator_inverse,
    invert,
    stab_join,
    stab_split,
    validate_membership,
)

from helpers import closed_unit_dyadics, elements

D = parse_dyadic


def test_generator_values():
    assert evaluate(generator(0), "1/2") == D("1/4")
    assert evaluate(generator(1), "3/4") == D("5/8")
    assert evaluate(generator(1), "1/2") == HALF
    assert evaluate(generator(1), "7/8") == D("3/4")
    assert evaluate(invert(generator(0)), "1/2") == D("3/4")


def test_frozen_forms():
    assert generator(2).to_text() == "[(0, 0), (3/4, 3/4), (7/8, 13/16), (15/16, 7/8), (1, 1)]"
    assert generator(3).to_text() == "[(0, 0), (7/8, 7/8), (15/16, 29/32), (31/32, 15/16), (1, 1)]"
    assert compose(X0, X1).to_text() == "[(0, 0), (1/2, 1/4), (7/8, 5/8), (15/16, 3/4), (1, 1)]"
    assert compose(X1, X0).to_text() == "[(0, 0), (3/4, 3/8), (7/8, 1/2), (1, 1)]"
    assert invert(X0).to_text() == "[(0, 0), (1/4, 1/2), (1/2, 3/4), (1, 1)]"


@pytest.mark.parametrize("n", range(2, 7))
def test_generator_support(n):
    g = generator(n)
    edge = Dyadic(1) - Dyadic(1, n)
    assert g.breakpoints[1] == edge and g.values[1] == edge
    for k in range(0, 2 ** n - 1):
        t = Dyadic(k, n)
        assert evaluate(g, t) == t
    assert evaluate(g, Dyadic(2 ** (n + 1) - 1, n + 1)) != Dyadic(2 ** (n + 1) - 1, n + 1)


def test_composition_convention():
    # (fg)(t) = g(f(t)): first x0 then x1
    t = D("3/4")
    assert evaluate(compose(X0, X1), t) == evaluate(X1, evaluate(X0, t))


def test_compose_trivia():
    assert compose(X0, IDENTITY) == X0
    assert compose(X0, invert(X0)) == IDENTITY
    assert compose(generator(0), generator(2)) == compose(generator(3), generator(0))


def test_canonical_construction_drops_redundant_breakpoints():
    f = PLHomeo(["0", "1/4", "1/2", "1"], ["0", "1/4", "1/2", "1"])
    assert f == IDENTITY
    assert f.breakpoints == (Dyadic(0), Dyadic(1))


@pytest.mark.parametrize(
    "pairs",
    [
        [("0", "0"), ("1/3", "1/3"), ("1", "1")],
        [("0", "0"), ("1/4", "3/4"), ("1", "1")],
        [("0", "0"), ("1/2", "1/2"), ("1", "1/2")],
        [("0", "0"), ("1/2", "1/4"), ("1/4", "1/2"), ("1", "1")],
    ],
)
def test_validate_membership_rejects(pairs):
    assert not validate_membership(pairs)


def test_validate_membership_accepts():
    assert validate_membership(IDENTITY)
    assert validate_membership([("0", "0"), ("1/2", "1/4"), ("3/4", "1/2"), ("1", "1")])
    with pytest.raises(ValueError):
        PLHomeo(["0", "1/2", "1"], ["0", "3/4", "1"])  # slope 3/2


def test_evaluate_domain():
    with pytest.raises(ValueError):
        evaluate(X0, "3/2")


def test_text_round_trip():
    f = word_to_plhomeo("x0 x1^-1 x2")
    assert PLHomeo.from_text(f.to_text()) == f


def test_stab_split_examples():
    assert stab_split(IDENTITY) == (IDENTITY, IDENTITY)
    assert stab_split(X1) == (IDENTITY, X0)
    for n in range(5):
        assert stab_split(generator(n + 1)) == (IDENTITY, generator(n))
    assert stab_join(IDENTITY, X0) == X1
    assert stab_join(IDENTITY, IDENTITY) == IDENTITY
    with pytest.raises(ValueError):
        stab_split(X0)


@given(elements, elements, elements)
@settings(max_examples=60)
def test_group_laws(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, invert(f)) == IDENTITY
    assert invert(invert(f)) == f
    assert invert(compose(f, g)) == compose(invert(g), invert(f))


@given(elements, closed_unit_dyadics())
@settings(max_examples=100)
def test_evaluation_is_homomorphic(f, t):
    g = generator(1)
    assert evaluate(compose(f, g), t) == evaluate(g, evaluate(f, t))
    assert evaluate(invert(f), evaluate(f, t)) == t


@given(elements)
def test_elements_are_members(f):
    assert validate_membership(f)
    assert all(k == int(k) for k in f.slopes)


stab_words = st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=8)


@given(stab_words)
def test_stab_round_trip(letters):
    f = IDENTITY
    for i, s in letters:
        f = compose(f, generator(i) if s == 1 else generator_inverse(i))
    assert evaluate(f, HALF) == HALF
    assert stab_join(*stab_split(f)) == f
