import pytest
from hypothesis import given, strategies as st

from polycs.errors import WireFormatError
from polycs.words import Word, format_word, parse_word

syllable = st.tuples(st.integers(0, 5), st.integers(-6, 6))
words = st.lists(syllable, max_size=12).map(Word.from_syllables)


def test_free_reduction_merges_and_cancels():
    w = Word.of((0, 2), (0, -2), (1, 3))
    assert w.syllables == ((1, 3),)
    assert Word.of((0, 1), (0, 1)).syllables == ((0, 2),)
    assert Word.of((2, 4), (2, -4)).is_empty


def test_invariants_rejected():
    with pytest.raises(ValueError):
        Word(((0, 0),))
    with pytest.raises(ValueError):
        Word(((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        Word(((-1, 1),))


def test_formatting():
    assert format_word(Word()) == "1"
    assert format_word(Word.of((0, 1))) == "g1"
    assert format_word(Word.of((0, -1))) == "g1^-1"
    assert format_word(Word.of((1, 3), (0, -2))) == "g2^3*g1^-2"


def test_parse_examples():
    assert parse_word("1") == Word()
    assert parse_word("g1") == Word.of((0, 1))
    assert parse_word("g2^3*g1^-2") == Word.of((1, 3), (0, -2))


@pytest.mark.parametrize("bad", ["", "g0", "g1^0", "g1^+2", "g1 * g2", "g1^1 ", "G1", "g01"])
def test_parse_rejects(bad):
    with pytest.raises(WireFormatError):
        parse_word(bad)


@given(words)
def test_parse_format_roundtrip(w):
    assert parse_word(format_word(w)) == w


@given(words, words)
def test_inverse_antihomomorphism(a, b):
    assert (a * b).inverse() == b.inverse() * a.inverse()


@given(words)
def test_inverse_cancels(w):
    assert (w * w.inverse()).is_empty
    assert w.inverse().inverse() == w


@given(words, st.integers(-4, 4))
def test_word_powers(w, k):
    expected = Word()
    base = w if k >= 0 else w.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert w**k == expected


@given(words)
def test_letters_rebuild(w):
    assert Word.from_syllables(w.letters()) == w
    assert w.length() == sum(1 for _ in w.letters())
