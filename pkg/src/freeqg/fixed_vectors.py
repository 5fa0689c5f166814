"""Fixed vectors of tensor words of the fundamental representation.

Conventions
-----------
The conjugate space is identified with C^n through the canonical basis, so
``u^alpha = u`` and ``u^beta = F conj(u) F^-1`` both act on C^n and u^w acts
on (C^n)^{(x) |w|}.  A multi-index ``(s_1, ..., s_L)`` (0-based here) is
stored big-endian: ``index = s_1 n^(L-1) + ... + s_L``.

A pair joining positions i < j contributes the factor ``W[s_j, s_i]`` where
``W = F`` when position i carries alpha and ``W = conj(F)^-1`` when it
carries beta.  For a single pair these are the vectors

    E1 = sum_i e_i (x) F e_i           fixed by u (x) F conj(u) F^-1
    E2 = sum_i e_i (x) conj(F)^-1 e_i  fixed by F conj(u) F^-1 (x) u

Vectors are stored sparsely (index -> value); ``coords`` gives the dense form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DimensionError, FreeQGError, GuardrailError, NotOAdmissibleError, SingularMatrixError
from .exact import ONE, ZERO, ExactMatrix, GaussianRational
from .pairings import ColoredPairing, Pairing, enumerate_colored, enumerate_plain
from .words import Word

__all__ = [
    "FixedVector",
    "MAX_WORD_LENGTH",
    "check_guardrail",
    "validate_o_matrix",
    "pair_weights",
    "w_vector",
    "w_basis",
    "z_basis",
    "z_closed_form",
    "pairing_vector",
    "gram",
    "fixed_dim",
    "independent_subset",
    "haar_projector",
    "haar_entry",
    "w_span_dim",
    "multi_index",
]

# desk-scale limits on the word length, by n; larger n falls back to n^L <= 6561
MAX_WORD_LENGTH = {2: 12, 3: 8}
_MAX_TENSOR_DIM = 3**8


def check_guardrail(n: int, length: int, force: bool = False) -> None:
    if force:
        return
    limit = MAX_WORD_LENGTH.get(n)
    too_big = length > limit if limit is not None else n**length > _MAX_TENSOR_DIM
    if too_big:
        raise GuardrailError(
            f"tensor space of dimension {n}^{length} exceeds the desk-scale limit; use force=True"
        )


def multi_index(index: int, n: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        index, r = divmod(index, n)
        out.append(r)
    return tuple(reversed(out))


@dataclass(frozen=True, eq=False)
class FixedVector:
    """Vector in (C^n)^{(x) len(word)} with Gaussian-rational coordinates."""

    n: int
    word: Word
    entries: dict[int, GaussianRational] = field(repr=False)

    def __post_init__(self):
        dim = self.dim
        for k, v in self.entries.items():
            if not 0 <= k < dim:
                raise DimensionError(f"coordinate index {k} outside 0..{dim - 1}")
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if v})

    @property
    def dim(self) -> int:
        return self.n ** len(self.word)

    @property
    def coords(self) -> tuple[GaussianRational, ...]:
        return tuple(self.entries.get(k, ZERO) for k in range(self.dim))

    def __getitem__(self, index) -> GaussianRational:
        if isinstance(index, tuple):
            idx = 0
            for s in index:
                idx = idx * self.n + s
            index = idx
        return self.entries.get(index, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FixedVector):
            return NotImplemented
        return self.n == other.n and self.word == other.word and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.word, frozenset(self.entries.items())))

    def inner(self, other: FixedVector) -> GaussianRational:
        """<self, other>, conjugate-linear in ``self``."""
        a, b = self.entries, other.entries
        if len(b) < len(a):
            t = ZERO
            for k, y in b.items():
                x = a.get(k)
                if x is not None:
                    t = t + x.conjugate() * y
            return t
        t = ZERO
        for k, x in a.items():
            y = b.get(k)
            if y is not None:
                t = t + x.conjugate() * y
        return t

    def scalar_multiple_of(self, other: FixedVector) -> GaussianRational | None:
        """c with ``self == c * other``, or None."""
        if self.entries.keys() != other.entries.keys() or self.n != other.n:
            return None
        if not self.entries:
            return ONE
        k0 = next(iter(self.entries))
        c = self.entries[k0] / other.entries[k0]
        if all(self.entries[k] == c * other.entries[k] for k in self.entries):
            return c
        return None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "word": str(self.word),
            "entries": {str(k): v.to_pair() for k, v in sorted(self.entries.items())},
        }


def _as_matrix(F) -> ExactMatrix:
    return F if isinstance(F, ExactMatrix) else ExactMatrix(F)


def _check_square(F: ExactMatrix) -> int:
    if not F.is_square or F.nrows == 0:
        raise DimensionError(f"F must be a nonempty square matrix, got shape {F.shape}")
    return F.nrows


def validate_o_matrix(F) -> Fraction:
    """Return the real scalar c with F conj(F) = c I; raise NotOAdmissibleError otherwise."""
    F = _as_matrix(F)
    _check_square(F)
    c = (F @ F.conj()).scalar_value()
    if c is None or not c.is_real or not c:
        raise NotOAdmissibleError("F conj(F) is not a nonzero real multiple of the identity")
    return c.re


def pair_weights(F) -> dict[str, ExactMatrix]:
    """Weight matrix for a pair, keyed by the letter at its left end."""
    F = _as_matrix(F)
    n = _check_square(F)
    if n < 2:
        raise FreeQGError(f"n must be >= 2, got {n}")
    try:
        g = F.conj().inverse()
    except SingularMatrixError as exc:
        raise SingularMatrixError("F must be invertible") from exc
    return {"a": F, "b": g}


def z_basis(F, w: Word, force: bool = False) -> list[FixedVector]:
    """Spanning set of Mor(1, u^w) built recursively from E1 and E2.

    Words starting with alpha are split as ``alpha x beta y`` and the vector
    ``(I (x) M (x) I (x) N) E1`` is formed for M in Z_x, N in Z_y; words
    starting with beta use ``beta x alpha y`` and E2.  Output order matches
    :func:`freeqg.pairings.enumerate_colored`.
    """
    F = _as_matrix(F)
    weights = pair_weights(F)
    n = F.nrows
    check_guardrail(n, len(w), force)
    memo: dict[str, list[dict[int, GaussianRational]]] = {"": [{0: ONE}]}

    def build(s: str) -> list[dict[int, GaussianRational]]:
        if s in memo:
            return memo[s]
        out: list[dict[int, GaussianRational]] = []
        if len(s) % 2 == 0:
            head = s[0]
            W = weights[head].rows
            for j in range(1, len(s)):
                if s[j] == head:
                    continue
                xs, ys = s[1:j], s[j + 1 :]
                mx, my = n ** len(xs), n ** len(ys)
                for M in build(xs):
                    for N in build(ys):
                        v: dict[int, GaussianRational] = {}
                        for p in range(n):
                            for q in range(n):
                                wt = W[q][p]
                                if not wt:
                                    continue
                                base_pq = p * mx * n * my
                                for I, mi in M.items():
                                    base = base_pq + (I * n + q) * my
                                    wm = wt * mi
                                    for J, nj in N.items():
                                        v[base + J] = wm * nj
                        out.append(v)
        memo[s] = out
        return out

    return [FixedVector(n, w, v) for v in build(w.letters)]


def pairing_vector(W: dict[str, ExactMatrix] | ExactMatrix, n: int, word: Word, pairs: Sequence[tuple[int, int]]) -> FixedVector:
    """Product-of-pair-weights vector for a pairing of the positions of ``word``.

    Coordinate ``(s_1..s_L)`` is the product over pairs (i, j) of
    ``W[letter_i][s_j, s_i]`` (1-based positions).
    """
    s = word.letters
    L = len(s)
    choices = []
    for i, j in pairs:
        mat = W[s[i - 1]] if isinstance(W, dict) else W
        nz = [(a, b, mat.rows[b][a]) for a in range(n) for b in range(n) if mat.rows[b][a]]
        choices.append((i - 1, j - 1, nz))
    entries: dict[int, GaussianRational] = {}
    for combo in product(*(c[2] for c in choices)):
        idx = [0] * L
        val = ONE
        for (i, j, _), (a, b, wt) in zip(choices, combo):
            idx[i], idx[j] = a, b
            val = val * wt
        k = 0
        for t in idx:
            k = k * n + t
        entries[k] = val
    return FixedVector(n, word, entries)


def z_closed_form(F, w: Word, force: bool = False) -> list[FixedVector]:
    """Z basis computed pair by pair from the colored pairings of ``w``."""
    F = _as_matrix(F)
    weights = pair_weights(F)
    check_guardrail(F.nrows, len(w), force)
    return [pairing_vector(weights, F.nrows, w, cp.pairs) for cp in enumerate_colored(w)]


def w_vector(F, P: Pairing, force: bool = False) -> FixedVector:
    """v(P) for A_o(F): every pair (i, j) contributes F[s_j, s_i]."""
    F = _as_matrix(F)
    validate_o_matrix(F)
    check_guardrail(F.nrows, P.size, force)
    return pairing_vector(F, F.nrows, Word("a" * P.size), P.pairs)


def w_basis(F, k: int, force: bool = False) -> list[FixedVector]:
    return [w_vector(F, P, force) for P in enumerate_plain(k)]


def gram(vectors: Sequence[FixedVector]) -> ExactMatrix:
    """Hermitian Gram matrix, entry (i, j) = <v_i, v_j>."""
    vectors = list(vectors)
    if not vectors:
        return ExactMatrix._trusted([], 0)
    n0, l0 = vectors[0].n, len(vectors[0].word)
    for v in vectors:
        if v.n != n0 or len(v.word) != l0:
            raise DimensionError("all vectors must live in the same tensor space")
    m = len(vectors)
    rows = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            g = vectors[i].inner(vectors[j])
            rows[i][j] = g
            rows[j][i] = g.conjugate()
    return ExactMatrix._trusted(rows, m)


def fixed_dim(F, w: Word, force: bool = False) -> int:
    """dim Mor(1, u^w) as the exact rank of the Gram matrix of the Z basis."""
    vecs = z_basis(F, w, force)
    return gram(vecs).rank() if vecs else 0


def independent_subset(vectors: Sequence[FixedVector]) -> list[FixedVector]:
    """Greedy maximal independent subset, kept in input order."""
    chosen: list[FixedVector] = []
    for v in vectors:
        if gram([*chosen, v]).rank() > len(chosen):
            chosen.append(v)
    return chosen


def _projector_parts(F, w: Word, force: bool):
    F = _as_matrix(F)
    basis = independent_subset(z_basis(F, w, force))
    ginv = gram(basis).inverse() if basis else ExactMatrix._trusted([], 0)
    return F.nrows, basis, ginv


def haar_projector(F, w: Word, force: bool = False) -> ExactMatrix:
    """Orthogonal projector onto the fixed vectors of u^w, i.e. (Id (x) h)(u^w).

    Built as ``V (V* V)^-1 V*`` where the columns of V are an independent
    subset of the Z basis.
    """
    n, basis, ginv = _projector_parts(F, w, force)
    N = n ** len(w)
    rows = [[ZERO] * N for _ in range(N)]
    for a, va in enumerate(basis):
        for b, vb in enumerate(basis):
            g = ginv.rows[a][b]
            if not g:
                continue
            right = [(J, y.conjugate()) for J, y in vb.entries.items()]
            for I, x in va.entries.items():
                gx = g * x
                row = rows[I]
                for J, yc in right:
                    row[J] = row[J] + gx * yc
    return ExactMatrix._trusted(rows, N)


def haar_entry(F, w: Word, I: int, J: int, force: bool = False) -> GaussianRational:
    """Single entry (I, J) of :func:`haar_projector` without forming the full matrix."""
    n, basis, ginv = _projector_parts(F, w, force)
    N = n ** len(w)
    if not (0 <= I < N and 0 <= J < N):
        raise DimensionError(f"entry ({I}, {J}) outside a {N}x{N} projector")
    t = ZERO
    for a, va in enumerate(basis):
        x = va.entries.get(I)
        if x is None:
            continue
        for b, vb in enumerate(basis):
            y = vb.entries.get(J)
            if y is not None and ginv.rows[a][b]:
                t = t + x * ginv.rows[a][b] * y.conjugate()
    return t


def w_span_dim(F, k: int, force: bool = False) -> int:
    """Rank of the Gram matrix of {v(P)} over non-crossing pairings of 2k points."""
    F = _as_matrix(F)
    validate_o_matrix(F)
    if F.nrows < 2:
        raise FreeQGError("n must be >= 2")
    return gram(w_basis(F, k, force)).rank()
