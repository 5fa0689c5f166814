"""Set-level fusion on subsets of N*N and bounded checks of the Powers-type lemmas.

Pattern sets are infinite; every check here runs on their members of
length <= L and its result is a statement about that truncation only.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import FreeQGError
from .fusion import _fuse_words
from .words import E, Word, all_words, parse, shortlex_key

__all__ = [
    "WordSet",
    "Explicit",
    "StartsWith",
    "EndsWith",
    "StartsAndEnds",
    "Union",
    "set_fuse",
    "Lemma12Report",
    "check_lemma12",
    "lemma13_product",
    "check_lemma13",
    "Lemma10Report",
    "lemma10_trial",
    "lemma10_sweep",
    "lemma10_extremal",
    "LEMMA10_SLACK",
    "seeded_word_sets",
]

LEMMA10_SLACK = 1e-9


class WordSet(ABC):
    @abstractmethod
    def __contains__(self, w: Word) -> bool: ...

    def members(self, L: int) -> frozenset[Word]:
        """All members of length <= L."""
        return frozenset(w for w in all_words(L) if w in self)

    def __or__(self, other: WordSet) -> WordSet:
        return Union(self, other)


@dataclass(frozen=True)
class Explicit(WordSet):
    words: frozenset[Word] = frozenset()

    def __init__(self, words: Iterable[Word | str] = ()):
        ws = frozenset(parse(w) if isinstance(w, str) else w for w in words)
        object.__setattr__(self, "words", ws)

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def members(self, L: int) -> frozenset[Word]:
        return frozenset(w for w in self.words if len(w) <= L)

    def __iter__(self):
        return iter(sorted(self.words, key=shortlex_key))

    def __len__(self) -> int:
        return len(self.words)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)


@dataclass(frozen=True)
class StartsWith(WordSet):
    prefix: Word

    def __contains__(self, w: Word) -> bool:
        return w.startswith(self.prefix)


@dataclass(frozen=True)
class EndsWith(WordSet):
    suffix: Word

    def __contains__(self, w: Word) -> bool:
        return w.endswith(self.suffix)


@dataclass(frozen=True)
class StartsAndEnds(WordSet):
    """Words beginning with ``prefix`` and ending with ``suffix`` (the two may overlap)."""

    prefix: Word
    suffix: Word

    def __contains__(self, w: Word) -> bool:
        return w.startswith(self.prefix) and w.endswith(self.suffix)


@dataclass(frozen=True)
class Union(WordSet):
    parts: tuple[WordSet, ...]

    def __init__(self, *parts: WordSet):
        object.__setattr__(self, "parts", tuple(parts))

    def __contains__(self, w: Word) -> bool:
        return any(w in p for p in self.parts)


def _fuse_sets(A: Iterable[Word], B: Iterable[Word], L: int | None) -> frozenset[Word]:
    out: set[str] = set()
    bs = [b.letters for b in B]
    for a in A:
        for b in bs:
            out.update(_fuse_words(a.letters, b))
    return frozenset(Word(s) for s in out if L is None or len(s) <= L)


def set_fuse(A: WordSet, B: WordSet, L: int) -> Explicit:
    """A o B on members of length <= L, truncated to length <= L."""
    if L < 0:
        raise FreeQGError(f"L must be non-negative, got {L}")
    return Explicit(_fuse_sets(A.members(L), B.members(L), L))


# --- first combinatorial lemma --------------------------------------------------

LEMMA12_RS = (parse("bab"), parse("baab"), parse("baaab"))


@dataclass
class Lemma12Report:
    L: int
    partition_ok: bool
    f_d_disjoint: bool
    r_disjoint: bool
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.partition_ok and self.f_d_disjoint and self.r_disjoint

    def to_json(self) -> dict:
        return {
            "L": self.L,
            "passed": self.passed,
            "partition": self.partition_ok,
            "F_o_D_disjoint_from_D": self.f_d_disjoint,
            "r_o_E_pairwise_disjoint": self.r_disjoint,
            "witnesses": self.witnesses,
            "scope": f"words of length <= {self.L}",
        }


def check_lemma12(L: int, rs: Iterable[Word] = LEMMA12_RS) -> Lemma12Report:
    """Check D = {a...}, E = {b...} u {e}, F = {b...a} on words of length <= L.

    Verifies that D, E partition the words, that F o D misses D, and that
    the sets r o E for the given r's are pairwise disjoint.
    """
    rs = tuple(rs)
    need = max(len(r) for r in rs) + 1
    if L < need:
        raise FreeQGError(f"L must be at least {need} so that every r fits, got {L}")
    D = StartsWith(parse("a"))
    Eset = Union(StartsWith(parse("b")), Explicit([E]))
    Fset = StartsAndEnds(parse("b"), parse("a"))
    witnesses: list[str] = []

    everything = frozenset(all_words(L))
    d_m, e_m = D.members(L), Eset.members(L)
    partition_ok = not (d_m & e_m) and (d_m | e_m) == everything
    if not partition_ok:
        witnesses.append(f"partition fails on {sorted(map(str, (d_m & e_m) | (everything - d_m - e_m)))[:5]}")

    fd = set_fuse(Fset, D, L).words & d_m
    if fd:
        witnesses.append(f"F o D meets D at {min(fd, key=shortlex_key)}")

    r_sets = [set_fuse(Explicit([r]), Eset, L).words for r in rs]
    r_ok = True
    for (i, a), (j, b) in combinations(enumerate(r_sets), 2):
        common = a & b
        if common:
            r_ok = False
            witnesses.append(f"r{i + 1} o E and r{j + 1} o E share {min(common, key=shortlex_key)}")
    return Lemma12Report(L, partition_ok, not fd, r_ok, witnesses)


# --- second combinatorial lemma -----------------------------------------------------

def _in_target(w: Word) -> bool:
    return w.is_empty or (w.letters[0] == "b" and w.letters[-1] == "a")


def lemma13_product(Fset: Iterable[Word], N: int) -> frozenset[Word]:
    """(ba)^N o Fset o (ba)^N computed exactly (no truncation)."""
    z = [Word("ba" * N)]
    return _fuse_sets(_fuse_sets(z, Fset, None), z, None)


def check_lemma13(Fset: Explicit | Iterable[Word], max_N: int) -> int | None:
    """Least N <= max_N with (ba)^N o Fset o (ba)^N inside {b...a} u {e}, else None."""
    words = list(Fset)
    for N in range(max_N + 1):
        if all(_in_target(w) for w in lemma13_product(words, N)):
            return N
    return None


# --- norm bound for unital completely positive maps ---------------------------------

@dataclass
class Lemma10Report:
    trials: int
    max_ratio: float
    max_q_weight_excess: float
    settings: list[tuple[int, float, int]]
    seed: int

    @property
    def passed(self) -> bool:
        return self.max_ratio <= 1 + LEMMA10_SLACK and self.max_q_weight_excess <= LEMMA10_SLACK

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "max_ratio": self.max_ratio,
            "passed": self.passed,
            "seed": self.seed,
            "slack": LEMMA10_SLACK,
            "settings": [{"d": d, "delta": dl, "trials": t} for d, dl, t in self.settings],
        }


def _check_delta(d: int, delta: float) -> None:
    if not (0 < delta < 0.5):
        raise FreeQGError(f"delta must satisfy 0 < delta < 1/2, got {delta}")
    if d < 2:
        raise FreeQGError(f"d must be >= 2, got {d}")


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def _ratios(d: int, delta: float, trials: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    # random projection p of rank r in [1, d-1] and q = 1 - p
    z = rng.standard_normal((trials, d, d)) + 1j * rng.standard_normal((trials, d, d))
    U, _ = np.linalg.qr(z)
    ranks = rng.integers(1, d, size=trials)
    mask = (np.arange(d)[None, :] < ranks[:, None]).astype(float)
    p = (U * mask[:, None, :]) @ U.conj().transpose(0, 2, 1)
    q = np.eye(d)[None] - p

    # hermitian x with p x p = 0
    h = rng.standard_normal((trials, d, d)) + 1j * rng.standard_normal((trials, d, d))
    h = (h + h.conj().transpose(0, 2, 1)) / 2
    x = h - p @ h @ p

    # unit xi with <q xi, xi> = t <= delta
    a = _unit(np.einsum("bij,bj->bi", p, rng.standard_normal((trials, d)) + 1j * rng.standard_normal((trials, d))))
    b = _unit(np.einsum("bij,bj->bi", q, rng.standard_normal((trials, d)) + 1j * rng.standard_normal((trials, d))))
    phase = np.exp(2j * np.pi * rng.random(trials))
    t = delta * np.sqrt(rng.random(trials))
    xi = np.sqrt(1 - t)[:, None] * a + (np.sqrt(t) * phase)[:, None] * b

    q_weight = np.einsum("bi,bij,bj->b", xi.conj(), q, xi).real
    quad = np.abs(np.einsum("bi,bij,bj->b", xi.conj(), x, xi))
    norm_x = np.abs(np.linalg.eigvalsh(x)).max(axis=1)
    bound = 2 * np.sqrt(delta - delta**2) * norm_x
    return quad / bound, q_weight - delta


def lemma10_trial(d: int, delta: float, trials: int, seed: int) -> Lemma10Report:
    """Monte-Carlo check of |<x xi, xi>| <= 2 sqrt(delta - delta^2) ||x||.

    Samples a random projection pair p + q = 1 on C^d, a random hermitian x
    with p x p = 0 and a random unit xi with <q xi, xi> <= delta.  Uses
    ``numpy.random.default_rng(seed)``.
    """
    _check_delta(d, delta)
    rng = np.random.default_rng(seed)
    r, excess = _ratios(d, delta, trials, rng)
    return Lemma10Report(trials, float(r.max()), float(excess.max()), [(d, delta, trials)], seed)


def lemma10_sweep(ds: Iterable[int], deltas: Iterable[float], total_trials: int, seed: int) -> Lemma10Report:
    """Spread ``total_trials`` evenly over the (d, delta) grid with one seeded generator."""
    grid = [(d, dl) for d in ds for dl in deltas]
    for d, dl in grid:
        _check_delta(d, dl)
    rng = np.random.default_rng(seed)
    base, extra = divmod(total_trials, len(grid))
    max_r, max_e, settings = 0.0, -np.inf, []
    for i, (d, dl) in enumerate(grid):
        k = base + (i < extra)
        r, excess = _ratios(d, dl, k, rng)
        max_r = max(max_r, float(r.max()))
        max_e = max(max_e, float(excess.max()))
        settings.append((d, dl, k))
    return Lemma10Report(total_trials, max_r, max_e, settings, seed)


def lemma10_extremal(delta: float) -> float:
    """Ratio attained by the 2x2 configuration with b = 1, a = 1 - |b|^2 = 0."""
    _check_delta(2, delta)
    q = np.diag([1.0, 0.0])
    p = np.diag([0.0, 1.0])
    b = 1.0
    a = 1 - abs(b) ** 2
    x = np.array([[a, b], [np.conj(b), 0.0]])
    assert np.allclose(p @ x @ p, 0)
    xi = np.array([np.sqrt(delta), np.sqrt(1 - delta)])
    assert np.isclose(xi @ q @ xi, delta)
    quad = abs(xi.conj() @ x @ xi)
    norm_x = np.abs(np.linalg.eigvalsh(x)).max()
    return float(quad / (2 * np.sqrt(delta - delta**2) * norm_x))


def seeded_word_sets(count: int, max_len: int, seed: int, max_size: int = 5) -> list[Explicit]:
    """Reproducible finite word sets with members of length <= max_len."""
    rng = random.Random(seed)
    pool = list(all_words(max_len))
    return [Explicit(rng.sample(pool, rng.randint(1, max_size))) for _ in range(count)]
