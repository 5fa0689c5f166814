from fractions import Fraction

import numpy as np
import pytest

from freeqg.errors import FreeQGError, GuardrailError, NotOAdmissibleError
from freeqg.exact import ExactMatrix, GaussianRational, gq, random_invertible
from freeqg.fixed_vectors import (
    check_guardrail,
    fixed_dim,
    gram,
    haar_entry,
    haar_projector,
    independent_subset,
    pair_weights,
    pairing_vector,
    validate_o_matrix,
    w_basis,
    w_span_dim,
    w_vector,
    z_basis,
    z_closed_form,
)
from freeqg.fusion import generalized_catalan
from freeqg.pairings import Pairing, enumerate_colored
from freeqg.words import E, Word, all_words

I_ = GaussianRational(0, 1)
UNITARY_F = {
    "id2": ExactMatrix.identity(2),
    "J": ExactMatrix([[0, 1], [-1, 0]]),
    "phase": ExactMatrix([[1, 0], [0, I_]]),
    "rotation": ExactMatrix([[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]]),
    "id3": ExactMatrix.identity(3),
    "perm3": ExactMatrix([[0, I_, 0], [0, 0, 1], [-1, 0, 0]]),
}


def to_numpy(M):
    return np.array([[complex(float(a.re), float(a.im)) for a in r] for r in M.rows])


def vec(v):
    return np.array([complex(float(a.re), float(a.im)) for a in v.coords])


def haar_unitary(n, rng):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / abs(np.diag(r)))


def tensor_word(word, factors):
    out = np.ones((1, 1))
    for c in word.letters:
        out = np.kron(out, factors[c])
    return out


@pytest.mark.parametrize("name", sorted(UNITARY_F))
def test_basis_vectors_fixed_by_classical_unitaries(name):
    # for unitary F every unitary U is a classical point, with u^beta = F conj(U) F^-1
    F = UNITARY_F[name]
    Fn = to_numpy(F)
    rng = np.random.default_rng(11)
    n = F.nrows
    for _ in range(3):
        U = haar_unitary(n, rng)
        factors = {"a": U, "b": Fn @ U.conj() @ np.linalg.inv(Fn)}
        for w in all_words(4 if n == 2 else 2):
            for v in z_basis(F, w):
                x = vec(v)
                assert np.allclose(tensor_word(w, factors) @ x, x), (name, str(w))


def test_o_vectors_fixed_by_su2_and_o2():
    rng = np.random.default_rng(3)
    J = UNITARY_F["J"]
    for _ in range(3):
        U = haar_unitary(2, rng)
        U = U / np.sqrt(np.linalg.det(U))
        O, _ = np.linalg.qr(rng.normal(size=(2, 2)))
        for F, G in ((J, U), (ExactMatrix.identity(2), O)):
            Fn = to_numpy(F)
            assert np.allclose(Fn @ G.conj() @ np.linalg.inv(Fn), G)
            for k in range(4):
                for v in w_basis(F, k):
                    x = vec(v)
                    assert np.allclose(tensor_word(Word("a" * 2 * k), {"a": G}) @ x, x)


def test_single_pair_vectors():
    F = random_invertible(2, 4)
    W = pair_weights(F)
    (e1,) = z_basis(F, Word("ab"))
    (e2,) = z_basis(F, Word("ba"))
    for p in range(2):
        for q in range(2):
            assert e1[p, q] == F[q, p]
            assert e2[p, q] == W["b"][q, p]
    assert W["b"] == F.conj().inverse()


def test_gram_example():
    vs = z_basis(ExactMatrix.identity(2), Word("abab"))
    assert gram(vs) == ExactMatrix([[4, 2], [2, 4]])


def test_w_vector_example(twisted):
    v = w_vector(twisted, Pairing(((1, 2),)))
    assert v.coords == (gq(0), gq(-1), gq(1), gq(0))
    assert validate_o_matrix(twisted) == -1


def test_z_basis_matches_closed_form(random_F):
    for w in all_words(4):
        assert z_basis(random_F, w) == z_closed_form(random_F, w)
        assert len(z_basis(random_F, w)) == len(enumerate_colored(w))


def test_fixed_dim_equals_catalan(random_F):
    for w in all_words(4):
        assert fixed_dim(random_F, w) == generalized_catalan(w)


def test_colored_vectors_are_rescaled_plain_vectors(twisted):
    # when F conj(F) = c, conj(F)^-1 = F / c, so a beta-opened pair costs 1/c
    c = validate_o_matrix(twisted)
    W = pair_weights(twisted)
    for w in all_words(6):
        for cp in enumerate_colored(w):
            z = pairing_vector(W, 2, w, cp.pairs)
            v = pairing_vector(twisted, 2, w, cp.pairs)
            beta_open = sum(1 for i, _ in cp.pairs if w.letters[i - 1] == "b")
            assert z.scalar_multiple_of(v) == gq(Fraction(1) / c**beta_open)


def test_w_span(eye2, twisted):
    assert [w_span_dim(eye2, k) for k in range(5)] == [1, 1, 2, 5, 14]
    # SU(2): Temperley-Lieb at n = 2 stays independent too
    assert w_span_dim(twisted, 3) == 5


def test_not_o_admissible():
    with pytest.raises(NotOAdmissibleError):
        validate_o_matrix(ExactMatrix([[1, 1], [0, 1]]))
    with pytest.raises(NotOAdmissibleError):
        w_span_dim(ExactMatrix([[2, 0], [0, 1]]), 1)


def test_small_n_rejected():
    with pytest.raises(FreeQGError):
        z_basis(ExactMatrix.identity(1), Word("ab"))


def test_guardrail():
    check_guardrail(2, 12)
    with pytest.raises(GuardrailError):
        check_guardrail(2, 13)
    with pytest.raises(GuardrailError):
        check_guardrail(3, 9)
    check_guardrail(3, 9, force=True)
    check_guardrail(4, 6)
    with pytest.raises(GuardrailError):
        check_guardrail(4, 7)
    with pytest.raises(GuardrailError):
        z_basis(ExactMatrix.identity(3), Word("ab" * 5))


def test_haar_projector(eye2):
    assert haar_projector(eye2, E) == ExactMatrix([[1]])
    assert haar_projector(eye2, Word("a")).is_zero()
    P = haar_projector(eye2, Word("ab"))
    assert P[0, 3] == gq(Fraction(1, 2))
    assert haar_entry(eye2, Word("ab"), 0, 3) == P[0, 3]


def test_haar_projector_random_F(random_F):
    # exact P @ P is cubic in n^|w|, keep n = 3 to two letters
    long_words = [Word("abba"), Word("abab"), Word("aabb")] if random_F.nrows == 2 else []
    for w in [Word("ab"), Word("ba"), *long_words]:
        P = haar_projector(random_F, w)
        assert P @ P == P
        assert P.adjoint() == P
        assert P.trace() == gq(fixed_dim(random_F, w))
        for v in z_basis(random_F, w):
            # P fixes the fixed vectors
            image = [sum((P[i, j] * v.coords[j] for j in range(P.ncols)), gq(0)) for i in range(P.nrows)]
            assert tuple(image) == v.coords


def test_independent_subset(eye2):
    vs = z_basis(eye2, Word("abab"))
    assert len(independent_subset(vs + vs)) == 2
