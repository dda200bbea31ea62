import pytest
from hypothesis import given, settings, strategies as st

from thompsonf.monoid import (
    CARET,
    TRIVIAL,
    BinaryForest,
    Word,
    forest_generator,
    forest_product,
    forest_to_word,
    lemma1_check,
    lemma2_check,
    word_to_forest,
    word_to_plhomeo,
)
from thompsonf.plhomeo import IDENTITY, compose, generator

from helpers import positive_words


def test_word_parsing():
    w = Word.parse("x0 x2^-1 x1")
    assert w.letters == ((0, 1), (2, -1), (1, 1))
    assert str(w) == "x0 x2^-1 x1"
    assert str(w.inverse()) == "x1^-1 x2 x0^-1"
    assert len(Word.parse("")) == 0
    with pytest.raises(ValueError):
        Word.parse("x0^2")
    with pytest.raises(ValueError):
        Word.parse("y1")


def test_word_to_plhomeo():
    assert word_to_plhomeo("") == IDENTITY
    assert word_to_plhomeo("x0 x2") == word_to_plhomeo("x3 x0")
    assert word_to_plhomeo("x0 x1^-1") == compose(generator(0), generator(1).__invert__())


def test_forest_generators():
    assert forest_generator(0).trees == (CARET,)
    assert forest_generator(3).to_text() == "[., ., ., (.,.)]"
    assert word_to_forest("x3") == forest_generator(3)
    assert word_to_forest("") == TRIVIAL
    # x_n has n + 2 leaves in its stored trees
    for n in range(6):
        assert forest_generator(n).leaf_count() == n + 2


def test_frozen_forests():
    assert forest_product(forest_generator(0), forest_generator(0)).to_text() == "[((.,.),.)]"
    assert word_to_forest("x0 x1 x0").to_text() == "[((.,.),(.,.))]"
    assert word_to_forest("x2 x0").to_text() == "[(.,.), (.,.)]"
    assert word_to_forest("x3 x1").to_text() == "[., (.,.), (.,.)]"
    assert forest_to_word(word_to_forest("x2 x0")) == (0, 1)


def test_text_round_trip():
    f = word_to_forest("x0 x3 x1 x1 x0")
    assert BinaryForest.from_text(f.to_text()) == f
    with pytest.raises(ValueError):
        BinaryForest.from_text("(.,.)")


def test_remove_caret():
    f = word_to_forest("x2 x0")
    assert f.remove_caret(0) == forest_generator(2)
    assert f.remove_caret(1) == forest_generator(0)
    assert f.remove_caret(2) is None


def test_identity_element():
    f = word_to_forest("x1 x0 x4")
    assert forest_product(f, TRIVIAL) == f
    assert forest_product(TRIVIAL, f) == f


def test_lemma_examples():
    assert lemma1_check(2, "")
    assert lemma1_check(4, "x0 x1")
    assert lemma2_check(2, "", "")
    assert lemma2_check(3, "x1", "x0")
    with pytest.raises(ValueError):
        lemma1_check(3, "x0 x1")
    with pytest.raises(ValueError):
        lemma2_check(4, "x0", "")
    with pytest.raises(ValueError):
        lemma1_check(4, "x2")


def test_known_coincidence_is_detected():
    # x2 x0 = x0 x1, so the descriptor x2 x0 is not unique
    assert word_to_forest("x2 x0") == word_to_forest("x0 x1")
    assert word_to_forest("x3 x0 x0") == word_to_forest("x0 x0 x1")


@given(positive_words, positive_words, positive_words)
@settings(max_examples=200)
def test_forest_product_associative(a, b, c):
    fa, fb, fc = (word_to_forest(w) for w in (a, b, c))
    assert forest_product(forest_product(fa, fb), fc) == forest_product(fa, forest_product(fb, fc))


@given(positive_words, positive_words)
def test_product_matches_concatenation(a, b):
    assert forest_product(word_to_forest(a), word_to_forest(b)) == word_to_forest(a + b)


@given(positive_words, positive_words)
@settings(max_examples=150)
def test_forest_equality_matches_pl_equality(a, b):
    same_forest = word_to_forest(a) == word_to_forest(b)
    same_map = word_to_plhomeo(a) == word_to_plhomeo(b)
    assert same_forest == same_map


@given(positive_words)
def test_forest_to_word_round_trip(a):
    f = word_to_forest(a)
    w = forest_to_word(f)
    assert word_to_forest(w) == f
    assert len(w) == len(a) == f.caret_count()


@given(positive_words, st.integers(0, 4))
def test_right_division(a, k):
    f = word_to_forest(a)
    assert f.add_caret(k).remove_caret(k) == f
