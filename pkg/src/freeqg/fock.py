"""Truncated full Fock space over two generators.

The basis of ``l2(N*N)`` truncated at depth L is the set of words of
length <= L in shortlex order; word ``x`` has index ``2**len(x) - 1 +
int(x, base 2)`` with a -> 0, b -> 1.  S and T are left creation by alpha
and beta; chi(u) acts as S + T* and chi(u)* as S* + T.  Everything is an
integer sparse matrix, no floating point is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

from .errors import FreeQGError
from .words import Word

__all__ = [
    "TruncatedFock",
    "word_index",
    "fock_space",
    "fock_moment",
    "semicircular_moment",
]


def word_index(x: Word) -> int:
    s = x.letters
    if not s:
        return 0
    return (1 << len(s)) - 1 + int(s.translate(str.maketrans("ab", "01")), 2)


@dataclass(frozen=True)
class TruncatedFock:
    depth: int
    S: sp.csr_matrix
    T: sp.csr_matrix

    @property
    def dim(self) -> int:
        return (1 << (self.depth + 1)) - 1

    @property
    def chi(self) -> sp.csr_matrix:
        return (self.S + self.T.T).tocsr()

    @property
    def chi_star(self) -> sp.csr_matrix:
        return (self.S.T + self.T).tocsr()

    def vacuum(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[0] = 1
        return v


@lru_cache(maxsize=32)
def fock_space(depth: int) -> TruncatedFock:
    if depth < 0:
        raise FreeQGError(f"depth must be non-negative, got {depth}")
    dim = (1 << (depth + 1)) - 1
    src = np.arange((1 << depth) - 1)  # words of length < depth
    # a word at index i with length m and value v; alpha x has length m+1 and value v,
    # beta x has value v + 2**m
    lengths = np.array([(int(i) + 1).bit_length() - 1 for i in src], dtype=np.int64)
    values = src - ((1 << lengths) - 1)
    s_dst = (1 << (lengths + 1)) - 1 + values
    t_dst = s_dst + (1 << lengths)
    ones = np.ones(len(src), dtype=np.int64)
    S = sp.csr_matrix((ones, (s_dst, src)), shape=(dim, dim), dtype=np.int64)
    T = sp.csr_matrix((ones, (t_dst, src)), shape=(dim, dim), dtype=np.int64)
    return TruncatedFock(depth, S, T)


def fock_moment(w: Word, depth: int | None = None) -> int:
    """<P(w) delta_e, delta_e> with alpha -> S + T*, beta -> S* + T.

    Each factor changes word length by one, so ``depth = len(w)`` is exact.
    """
    L = len(w) if depth is None else depth
    if L < len(w):
        raise FreeQGError("depth must be at least the word length")
    space = fock_space(L)
    ops = {"a": space.chi, "b": space.chi_star}
    v = space.vacuum()
    for c in reversed(w.letters):
        v = ops[c] @ v
    return int(v[0])


def semicircular_moment(m: int) -> int:
    """m-th moment of S + S* on the one-generator Fock space (vacuum state)."""
    if not isinstance(m, int) or m < 0:
        raise FreeQGError(f"m must be a non-negative integer, got {m!r}")
    dim = m + 1
    shift = sp.csr_matrix(
        (np.ones(m, dtype=np.int64), (np.arange(1, dim), np.arange(m))),
        shape=(dim, dim),
        dtype=np.int64,
    )
    x = (shift + shift.T).tocsr()
    v = np.zeros(dim, dtype=np.int64)
    v[0] = 1
    for _ in range(m):
        v = x @ v
    return int(v[0])
