import numpy as np
import pytest

from freeqg.errors import FreeQGError
from freeqg.fock import fock_moment, fock_space, semicircular_moment, word_index
from freeqg.fusion import catalan_closed, star_moment
from freeqg.words import E, Word, all_words


def test_word_index_is_shortlex_rank():
    for i, w in enumerate(all_words(5)):
        assert word_index(w) == i


def test_truncated_space_shapes():
    fs = fock_space(3)
    assert fs.dim == 15
    assert fs.chi.shape == (15, 15)
    v = fs.vacuum()
    assert v[0] == 1 and v.sum() == 1
    assert (fs.chi_star != fs.chi.T).nnz == 0


def test_chi_on_vacuum():
    fs = fock_space(2)
    out = fs.chi @ fs.vacuum()
    # S e = e_a and T* kills the vacuum
    assert np.flatnonzero(out).tolist() == [word_index(Word("a"))]


def test_semicircular_moments():
    assert [semicircular_moment(m) for m in range(9)] == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert semicircular_moment(12) == catalan_closed(6)


def test_fock_matches_fusion_moment():
    for w in all_words(8):
        assert fock_moment(w) == star_moment(w)
    assert fock_moment(E) == 1


def test_extra_depth_changes_nothing():
    w = Word("ab" * 5)
    assert fock_moment(w) == fock_moment(w, depth=12) == 42


def test_depth_below_length_rejected():
    with pytest.raises(FreeQGError):
        fock_moment(Word("abab"), depth=3)
