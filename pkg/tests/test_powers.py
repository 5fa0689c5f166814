import numpy as np
import pytest

from freeqg.errors import FreeQGError
from freeqg.powers import (
    EndsWith,
    Explicit,
    StartsAndEnds,
    StartsWith,
    Union,
    check_lemma12,
    check_lemma13,
    lemma10_extremal,
    lemma10_sweep,
    lemma10_trial,
    lemma13_product,
    seeded_word_sets,
    set_fuse,
)
from freeqg.fusion import fuse
from freeqg.words import E, Word, all_words


def test_pattern_sets():
    assert Word("ab") in StartsWith(Word("a"))
    assert Word("ab") not in EndsWith(Word("a"))
    assert E not in StartsAndEnds(Word("b"), Word("a"))
    assert Word("ba") in StartsAndEnds(Word("b"), Word("a"))
    # "b" alone starts and ends with b but cannot start with b and end with a
    assert Word("b") not in StartsAndEnds(Word("b"), Word("a"))
    u = Union(StartsWith(Word("b")), Explicit([E]))
    assert u.members(2) == {E, Word("b"), Word("ba"), Word("bb")}
    assert (StartsWith(Word("a")) | Explicit(["b"])).members(1) == {Word("a"), Word("b")}


def test_set_fuse_is_union_of_supports():
    A, B = Explicit(["a", "ab"]), Explicit(["b", "e"])
    got = set_fuse(A, B, 10).words
    expect = set()
    for x in A:
        for y in B:
            expect |= set(fuse(x, y))
    assert got == expect


def test_set_fuse_truncation_superset():
    # truncating the inputs can only lose outputs
    A, B = StartsWith(Word("ab")), EndsWith(Word("a"))
    small, big = set_fuse(A, B, 4).words, set_fuse(A, B, 6).words
    assert small <= {w for w in big if len(w) <= 4}


@pytest.mark.parametrize("L", [6, 7, 8])
def test_disjointness_checks_pass(L):
    rep = check_lemma12(L)
    assert rep.passed, rep.witnesses
    assert rep.to_json()["scope"] == f"words of length <= {L}"


def test_disjointness_check_reports_witness():
    rep = check_lemma12(6, rs=(Word("bab"), Word("bab")))
    assert not rep.passed
    assert "share" in rep.witnesses[0]


def test_disjointness_needs_room():
    with pytest.raises(FreeQGError):
        check_lemma12(5)


def test_conjugation_into_target():
    assert check_lemma13(Explicit(["ab", "ba"]), 5) == 1
    assert check_lemma13(Explicit([E]), 5) == 0
    assert check_lemma13(Explicit([]), 5) == 0
    assert check_lemma13(Explicit(["a"]), 0) is None
    for w in lemma13_product(Explicit(["ab"]), 1):
        assert w.is_empty or (w.letters[0] == "b" and w.letters[-1] == "a")


def test_seeded_sets_are_reproducible():
    a = seeded_word_sets(5, 4, seed=1)
    b = seeded_word_sets(5, 4, seed=1)
    assert [set(x) for x in a] == [set(x) for x in b]
    assert all(0 < len(x) <= 5 and all(len(w) <= 4 for w in x) for x in a)


def test_norm_bound_sampling():
    rep = lemma10_trial(3, 0.25, 5000, seed=1)
    assert rep.passed
    assert 0 < rep.max_ratio <= 1
    assert rep.to_json()["trials"] == 5000
    assert lemma10_trial(3, 0.25, 200, seed=9).max_ratio == lemma10_trial(3, 0.25, 200, seed=9).max_ratio


def test_norm_bound_sweep_spreads_trials():
    rep = lemma10_sweep([2, 3], [0.1, 0.4], 10, seed=0)
    assert sum(t for _, _, t in rep.settings) == 10
    assert rep.passed


@pytest.mark.parametrize("delta", [0.05, 0.1, 1 / 3, 0.45])
def test_extremal_configuration_is_sharp(delta):
    assert np.isclose(lemma10_extremal(delta), 1.0)


@pytest.mark.parametrize("d, delta", [(1, 0.2), (3, 0.0), (3, 0.5)])
def test_norm_bound_rejects_bad_parameters(d, delta):
    with pytest.raises(FreeQGError):
        lemma10_trial(d, delta, 10, seed=0)
