"""Cross-oracle verification suites behind ``freeqg verify``.

Each suite returns a :class:`SuiteResult`; :func:`run_all` runs them in
name order.  Word-length bounds are capped per suite so that the default
run stays in the tens of seconds.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .exact import ExactMatrix, ZERO, random_invertible
from .fixed_vectors import fixed_dim, haar_projector, w_span_dim, z_basis, z_closed_form
from .fock import fock_moment, semicircular_moment
from .fusion import (
    J_expand,
    J_inverse,
    catalan_closed,
    dim_element,
    dim_o,
    dim_u,
    fuse,
    fuse_elements,
    fuse_o,
    generalized_catalan,
    involute_element,
    star_moment,
    tau,
)
from .pairings import count_colored, count_plain, enumerate_colored, enumerate_plain
from .powers import check_lemma12, check_lemma13, lemma10_extremal, lemma10_sweep, seeded_word_sets
from .words import E, Word, all_words, involute, splits


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "seconds": round(self.seconds, 3),
            "failures": self.failures[:10],
        }


class _Tally:
    def __init__(self):
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(str(what))


def suite_words(max_len: int) -> _Tally:
    t = _Tally()
    m = min(max_len, 6)
    for x in all_words(m):
        t.check(involute(involute(x)) == x, f"involution not of order 2 at {x}")
        sp = splits(x)
        t.check(len(sp) == len(x) + 1 and all(a + g == x for a, g in sp), f"splits({x})")
        for y in all_words(m - len(x)):
            t.check(involute(x + y) == involute(y) + involute(x), f"antimultiplicative at {x},{y}")
    return t


def suite_fusion_laws(max_len: int) -> _Tally:
    t = _Tally()
    m = min(max_len, 4)
    words = list(all_words(m))
    for x, y in product(words, words):
        xy = fuse(x, y)
        t.check(fuse(E, x) == x and fuse(x, E) == x, f"unit at {x}")
        t.check(involute_element(xy) == fuse(involute(y), involute(x)), f"involution at {x},{y}")
        t.check(tau(fuse(x, involute(y))) == (1 if x == y else 0), f"orthonormality at {x},{y}")
        for z in words:
            t.check(fuse_elements(xy, z) == fuse_elements(x, fuse(y, z)), f"associativity at {x},{y},{z}")
    return t


def suite_j_map(max_len: int) -> _Tally:
    t = _Tally()
    for w in all_words(min(max_len, 6)):
        jw = J_expand(w)
        t.check(J_inverse(jw) == w, f"J^-1 J != Id at {w}")
        t.check(all(len(v) < len(w) for v in (jw - w)), f"triangularity at {w}")
        t.check(all(c > 0 for c in jw.values()), f"positivity at {w}")
    return t


def suite_moments(max_len: int) -> _Tally:
    t = _Tally()
    for w in all_words(max_len):
        vals = (star_moment(w), generalized_catalan(w), len(enumerate_colored(w)), count_colored(w), fock_moment(w))
        t.check(len(set(vals)) == 1, f"{w}: {vals}")
        if len(w) % 2 == 0:
            t.check(vals[0] <= catalan_closed(len(w) // 2), f"moment dominance at {w}")
    return t


def suite_catalan_chain(max_len: int) -> _Tally:
    t = _Tally()
    eye = ExactMatrix.identity(2)
    for k in range(min(max_len // 2, 5) + 1):
        vals = (catalan_closed(k), count_plain(k), len(enumerate_plain(k)), semicircular_moment(2 * k), w_span_dim(eye, k))
        t.check(len(set(vals)) == 1, f"k={k}: {vals}")
        t.check(semicircular_moment(2 * k + 1) == 0, f"odd moment {2 * k + 1}")
    return t


def suite_dimensions(max_len: int) -> _Tally:
    t = _Tally()
    m = min(max_len, 5)
    for n in (2, 3):
        for x in all_words(m):
            for y in all_words(m):
                t.check(dim_element(fuse(x, y), n) == dim_u(x, n) * dim_u(y, n), f"dim_u n={n} {x},{y}")
    t.check(dim_u(Word("ab"), 2) == 3, "dim r_ab at n=2")
    for k in range(11):
        t.check(dim_o(k, 2) == k + 1, f"dim_o({k}, 2)")
    return t


def suite_ao_fusion(max_len: int) -> _Tally:
    t = _Tally()
    for k in range(9):
        for s in range(9):
            got = fuse_o(k, s)
            t.check(sorted(got.elements()) == list(range(abs(k - s), k + s + 1, 2)), f"ladder {k},{s}")
            for n in (2, 3):
                t.check(sum(dim_o(r, n) * c for r, c in got.items()) == dim_o(k, n) * dim_o(s, n), f"dims {k},{s}")
    return t


def suite_fixed_vectors(max_len: int) -> _Tally:
    t = _Tally()
    m = min(max_len, 4)
    for F in (ExactMatrix.identity(2), random_invertible(2, 1), ExactMatrix.identity(3), random_invertible(3, 1)):
        for w in all_words(m):
            t.check(fixed_dim(F, w) == generalized_catalan(w), f"rank at n={F.nrows} {w}")
            t.check(z_basis(F, w) == z_closed_form(F, w), f"closed form at n={F.nrows} {w}")
    return t


def suite_haar(max_len: int) -> _Tally:
    t = _Tally()
    m = min(max_len, 4)
    for F in (ExactMatrix.identity(2), random_invertible(2, 2)):
        traces = {}
        for w in all_words(m):
            P = haar_projector(F, w)
            traces[w] = P.trace()
            t.check(P @ P == P and P.adjoint() == P, f"projector laws at {w}")
            t.check(traces[w] == generalized_catalan(w), f"trace at {w}")
        # irreducible characters are J^-1 of words; they must be orthonormal
        for x in all_words(m // 2):
            for y in all_words(m // 2):
                s = ZERO
                for a, ca in J_inverse(x).items():
                    for b, cb in J_inverse(y).items():
                        s = s + traces[a + involute(b)] * (ca * cb)
                t.check(s == (1 if x == y else 0), f"character orthonormality at {x},{y}")
    return t


def suite_powers(max_len: int) -> _Tally:
    t = _Tally()
    for L in range(6, max(6, min(max_len, 8)) + 1):
        rep = check_lemma12(L)
        t.check(rep.passed, f"lemma12 L={L}: {rep.witnesses}")
    for i, fs in enumerate(seeded_word_sets(20, 4, seed=2024)):
        t.check(check_lemma13(fs, 8) is not None, f"lemma13 set {i}: {sorted(map(str, fs.words))}")
    rep = lemma10_sweep(range(2, 9), (0.1, 1 / 3, 0.45), 10_000, seed=7)
    t.check(rep.passed, f"lemma10 max ratio {rep.max_ratio}")
    t.check(lemma10_extremal(1 / 3) >= 1 - 1e-9, "lemma10 extremal")
    return t


SUITES: dict[str, Callable[[int], _Tally]] = {
    "ao_fusion": suite_ao_fusion,
    "catalan_chain": suite_catalan_chain,
    "dimensions": suite_dimensions,
    "fixed_vectors": suite_fixed_vectors,
    "fusion_laws": suite_fusion_laws,
    "haar": suite_haar,
    "j_map": suite_j_map,
    "moments": suite_moments,
    "powers": suite_powers,
    "words": suite_words,
}


def run_all(max_len: int = 8) -> list[SuiteResult]:
    out = []
    for name in sorted(SUITES):
        start = time.perf_counter()
        tally = SUITES[name](max_len)
        out.append(
            SuiteResult(name, not tally.failures, tally.checked, time.perf_counter() - start, tally.failures)
        )
    return out
