import pytest
from hypothesis import given, strategies as st

from freeqg.errors import WordParseError
from freeqg.words import E, Letter, Word, all_words, format_word, involute, parse, shortlex_key, splits, words_of_length

words = st.text(alphabet="ab", max_size=8).map(Word)


def test_parse_accepts_all_spellings():
    assert parse("e") == E
    assert parse("abba") == Word("abba")
    assert parse("αββ") == Word("abb")
    assert format_word(E) == "e"
    assert format_word(Word("ab")) == "ab"


@pytest.mark.parametrize("bad", ["", "x", "a b", "ea", "abc", "e e"])
def test_parse_rejects(bad):
    with pytest.raises(WordParseError):
        parse(bad)


def test_word_rejects_foreign_letters():
    with pytest.raises(WordParseError):
        Word("abx")


def test_letter_bar():
    assert Letter.ALPHA.bar is Letter.BETA
    assert Letter.BETA.bar is Letter.ALPHA


def test_involute_examples():
    assert involute(Word("aab")) == Word("abb")
    assert involute(E) == E
    assert involute(Word("a")) == Word("b")


@given(words, words)
def test_involute_antimultiplicative(x, y):
    assert involute(x + y) == involute(y) + involute(x)
    assert involute(involute(x)) == x
    assert len(involute(x)) == len(x)


@given(words)
def test_splits_cover_all_cuts(x):
    sp = splits(x)
    assert len(sp) == len(x) + 1
    assert sp[0] == (E, x) and sp[-1] == (x, E)
    assert all(a + g == x for a, g in sp)


def test_all_words_is_shortlex():
    ws = list(all_words(3))
    assert len(ws) == 15
    assert [str(w) for w in ws[:7]] == ["e", "a", "b", "aa", "ab", "ba", "bb"]
    assert ws == sorted(ws, key=shortlex_key)
    assert ws == sorted(ws)
    assert len(list(words_of_length(4))) == 16


def test_word_slicing_and_letters():
    w = Word("abb")
    assert w[1:] == Word("bb")
    assert w[0] is Letter.ALPHA
    assert list(w) == [Letter.ALPHA, Letter.BETA, Letter.BETA]
    assert w.startswith(Word("ab")) and w.endswith(Word("bb"))
    assert Word("ab") * 2 == Word("abab")
    assert str(E) == "e" and E.is_empty
