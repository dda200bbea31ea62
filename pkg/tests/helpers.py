"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from thompsonf.exact import Dyadic
from thompsonf.monoid import Word, word_to_plhomeo

letters = st.tuples(st.integers(0, 1), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=8).map(lambda ls: Word(tuple(ls)))
elements = words.map(word_to_plhomeo)
positive_words = st.lists(st.integers(0, 4), max_size=6).map(tuple)


@st.composite
def dyadics(draw, max_exp=12, lo=None, hi=None):
    e = draw(st.integers(0, max_exp))
    k = draw(st.integers(-(2 ** (e + 2)), 2 ** (e + 2)))
    return Dyadic(k, e)


@st.composite
def unit_dyadics(draw, max_exp=10):
    """Dyadics strictly inside (0, 1)."""
    e = draw(st.integers(1, max_exp))
    k = draw(st.integers(1, 2 ** e - 1))
    return Dyadic(k, e)


@st.composite
def closed_unit_dyadics(draw, max_exp=10):
    e = draw(st.integers(0, max_exp))
    k = draw(st.integers(0, 2 ** e))
    return Dyadic(k, e)
