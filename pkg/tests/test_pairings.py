from itertools import combinations

import pytest

from freeqg.errors import FreeQGError
from freeqg.fusion import catalan_closed, generalized_catalan
from freeqg.pairings import (
    ColoredPairing,
    Pairing,
    count_colored,
    count_plain,
    enumerate_colored,
    enumerate_plain,
    is_noncrossing,
)
from freeqg.words import Word, all_words


def brute_force_noncrossing(m):
    # every perfect matching of 1..m, filtered for crossings
    def matchings(points):
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for i, other in enumerate(rest):
            for tail in matchings(rest[:i] + rest[i + 1:]):
                yield ((first, other),) + tail
    return [m_ for m_ in matchings(tuple(range(1, m + 1))) if is_noncrossing(tuple(sorted(m_)))]


@pytest.mark.parametrize("k", range(6))
def test_plain_counts(k):
    ps = enumerate_plain(k)
    assert len(ps) == count_plain(k) == catalan_closed(k)
    assert len(set(ps)) == len(ps)
    assert {p.pairs for p in ps} == {tuple(sorted(m)) for m in brute_force_noncrossing(2 * k)}


def test_plain_canonical_order():
    assert [p.pairs for p in enumerate_plain(2)] == [((1, 2), (3, 4)), ((1, 4), (2, 3))]
    assert [p.pairs[0] for p in enumerate_plain(3)] == [(1, 2), (1, 2), (1, 4), (1, 6), (1, 6)]


def test_colored_counts_match_recursion():
    for w in all_words(8):
        cps = enumerate_colored(w)
        assert len(cps) == count_colored(w) == generalized_catalan(w)
        for cp in cps:
            for i, j in cp.pairs:
                assert w.letters[i - 1] != w.letters[j - 1]


def test_colored_degenerate_words():
    assert enumerate_colored(Word("aab")) == []
    assert enumerate_colored(Word("aabaa")) == []
    assert count_colored(Word("aaaa")) == 0
    assert len(enumerate_colored(Word(""))) == 1


def test_pairing_validation():
    with pytest.raises(FreeQGError):
        Pairing(((1, 3), (2, 4)))
    with pytest.raises(FreeQGError):
        Pairing(((1, 2), (3, 5)))
    with pytest.raises(FreeQGError):
        ColoredPairing(Pairing(((1, 2),)), Word("aa"))
    assert Pairing(((2, 1),)).pairs == ((1, 2),)


def test_is_noncrossing():
    assert is_noncrossing(((1, 4), (2, 3)))
    assert not is_noncrossing(((1, 3), (2, 4)))
    for a, b in combinations(range(1, 5), 2):
        assert is_noncrossing(((a, b),))
