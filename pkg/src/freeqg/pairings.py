"""Non-crossing pair partitions, plain and colored by an alpha/beta word.

Positions are 1-based.  Enumeration order is canonical: position 1 is
paired with each admissible partner in ascending order; for each partner
the pairings of the inner gap vary slowest and those of the outer gap
fastest.  :mod:`freeqg.fixed_vectors` relies on this order.

The ``count_*`` functions use interval recursions that never build a
pairing, so comparing them against ``len(enumerate_*)`` is a genuine
two-algorithm check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import FreeQGError
from .words import Word

__all__ = [
    "Pairing",
    "ColoredPairing",
    "enumerate_plain",
    "enumerate_colored",
    "count_plain",
    "count_colored",
    "is_noncrossing",
]

Pair = tuple[int, int]


def is_noncrossing(pairs: tuple[Pair, ...]) -> bool:
    for im, jm in pairs:
        for i_n, j_n in pairs:
            if im < i_n < jm and not j_n < jm:
                return False
    return True


@dataclass(frozen=True)
class Pairing:
    """Non-crossing perfect matching of {1, ..., 2k}, pairs sorted by opener."""

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = tuple(sorted((min(p), max(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        points = sorted(x for p in pairs for x in p)
        if points != list(range(1, 2 * len(pairs) + 1)):
            raise FreeQGError(f"not a perfect matching of 1..{2 * len(pairs)}: {pairs}")
        if any(i == j for i, j in pairs):
            raise FreeQGError("a pair must join two distinct positions")
        if not is_noncrossing(pairs):
            raise FreeQGError(f"pairing is crossing: {pairs}")

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)

    def partner(self) -> dict[int, int]:
        out = {}
        for i, j in self.pairs:
            out[i] = j
            out[j] = i
        return out


@dataclass(frozen=True)
class ColoredPairing:
    """A pairing of the positions of ``word`` joining one alpha with one beta per pair."""

    base: Pairing
    word: Word

    def __post_init__(self):
        if self.base.size != len(self.word):
            raise FreeQGError("pairing size does not match the word length")
        s = self.word.letters
        for i, j in self.base.pairs:
            if s[i - 1] == s[j - 1]:
                raise FreeQGError(f"pair {(i, j)} joins two copies of {s[i - 1]!r}")

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return self.base.pairs


def _gen(lo: int, hi: int, ok) -> Iterator[list[Pair]]:
    # non-crossing matchings of the interval [lo, hi), each pair accepted by ok
    if lo >= hi:
        yield []
        return
    for j in range(lo + 1, hi, 2):
        if not ok(lo, j):
            continue
        for inner in _gen(lo + 1, j, ok):
            for outer in _gen(j + 1, hi, ok):
                yield [(lo, j), *inner, *outer]


def enumerate_plain(k: int) -> list[Pairing]:
    if not isinstance(k, int) or k < 0:
        raise FreeQGError(f"k must be a non-negative integer, got {k!r}")
    return [Pairing(tuple(p)) for p in _gen(1, 2 * k + 1, lambda i, j: True)]


def enumerate_colored(w: Word) -> list[ColoredPairing]:
    s = w.letters
    if len(s) % 2 or s.count("a") != s.count("b"):
        return []

    def ok(i: int, j: int) -> bool:
        return s[i - 1] != s[j - 1]

    return [ColoredPairing(Pairing(tuple(p)), w) for p in _gen(1, len(s) + 1, ok)]


def count_plain(k: int) -> int:
    """D_0 = 1, D_{k+1} = sum_{x+y=k} D_x D_y."""
    if k < 0:
        raise FreeQGError(f"k must be non-negative, got {k}")
    d = [1]
    for m in range(k):
        d.append(sum(d[x] * d[m - x] for x in range(m + 1)))
    return d[k]


def count_colored(w: Word) -> int:
    """Number of colored non-crossing pairings by dynamic programming on intervals."""
    s = w.letters
    n = len(s)

    @lru_cache(maxsize=None)
    def c(lo: int, hi: int) -> int:
        # count for s[lo:hi]; the leftmost position must pair with some j
        if lo == hi:
            return 1
        return sum(
            c(lo + 1, j) * c(j + 1, hi)
            for j in range(lo + 1, hi, 2)
            if s[j] != s[lo]
        )

    return c(0, n) if n % 2 == 0 else 0
