"""Fusion ring of A_u(F) over N*N, the isomorphism J, moments and dimensions.

Irreducible representations of A_u(F) are indexed by words; the tensor
product of ``r_x`` and ``r_y`` decomposes as the sum of ``r_ab`` over all
``g`` with ``x = a g`` and ``y = bar(g) b``.  For A_o(F) the irreducibles
are indexed by N and fuse exactly like the SU(2) spins.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from functools import lru_cache
from math import comb

from .errors import FreeQGError
from .words import E, Word, involute, shortlex_key

__all__ = [
    "FusionElement",
    "as_element",
    "fuse",
    "fuse_elements",
    "involute_element",
    "J_expand",
    "J_expand_element",
    "J_inverse",
    "tau",
    "star_moment",
    "generalized_catalan",
    "dim_u",
    "dim_element",
    "fuse_o",
    "dim_o",
    "catalan_closed",
]


class FusionElement(Mapping):
    """Finitely supported integer combination of words.

    Zero coefficients are never stored.  ``f * g`` is the fusion product,
    ``k * f`` scales by an integer.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Word, int] = {}
        for w, c in items:
            if not isinstance(w, Word):
                raise TypeError(f"support must be Words, got {w!r}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            acc[w] = acc.get(w, 0) + c
        self._coeffs = {w: c for w, c in acc.items() if c}

    @classmethod
    def _trusted(cls, coeffs: dict[Word, int]) -> FusionElement:
        obj = cls.__new__(cls)
        obj._coeffs = {w: c for w, c in coeffs.items() if c}
        return obj

    def __getitem__(self, w: Word) -> int:
        return self._coeffs[w]

    def get(self, w, default=0):
        return self._coeffs.get(w, default)

    def __iter__(self):
        return iter(sorted(self._coeffs, key=shortlex_key))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            other = as_element(other)
        if isinstance(other, FusionElement):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other) -> FusionElement:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._coeffs)
        for w, c in other._coeffs.items():
            acc[w] = acc.get(w, 0) + c
        return FusionElement._trusted(acc)

    __radd__ = __add__

    def __neg__(self) -> FusionElement:
        return FusionElement._trusted({w: -c for w, c in self._coeffs.items()})

    def __sub__(self, other) -> FusionElement:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> FusionElement:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> FusionElement:
        if isinstance(other, int) and not isinstance(other, bool):
            return FusionElement._trusted({w: other * c for w, c in self._coeffs.items()})
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return fuse_elements(self, other)

    def __rmul__(self, other) -> FusionElement:
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return fuse_elements(other, self)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self._coeffs), default=-1)

    def to_dict(self) -> dict[str, int]:
        return {str(w): self._coeffs[w] for w in self}

    def __repr__(self) -> str:
        if not self._coeffs:
            return "FusionElement(0)"
        terms = " + ".join(
            (f"{c}*{w}" if c != 1 else str(w)) for w, c in ((w, self._coeffs[w]) for w in self)
        )
        return f"FusionElement({terms})"


def _coerce(x) -> FusionElement | None:
    if isinstance(x, FusionElement):
        return x
    if isinstance(x, Word):
        return FusionElement._trusted({x: 1})
    return None


def as_element(x: Word | FusionElement) -> FusionElement:
    f = _coerce(x)
    if f is None:
        raise TypeError(f"cannot interpret {x!r} as a fusion element")
    return f


def _fuse_words(xs: str, ys: str) -> list[str]:
    # g ranges over suffixes of x; bar(g) must then be a prefix of y.
    out = [xs + ys]
    m = min(len(xs), len(ys))
    for k in range(1, m + 1):
        # bar(g) is the reverse-swap of the last k letters of x
        if xs[-k] == ys[k - 1]:
            break
        out.append(xs[:-k] + ys[k:])
    return out


def fuse(x: Word, y: Word) -> FusionElement:
    """Decompose r_x (x) r_y into irreducibles."""
    return FusionElement._trusted({Word(s): 1 for s in _fuse_words(x.letters, y.letters)})


def fuse_elements(f, g) -> FusionElement:
    """Bilinear extension of :func:`fuse`."""
    f, g = as_element(f), as_element(g)
    acc: Counter = Counter()
    for x, cx in f._coeffs.items():
        for y, cy in g._coeffs.items():
            c = cx * cy
            for s in _fuse_words(x.letters, y.letters):
                acc[s] += c
    return FusionElement._trusted({Word(s): c for s, c in acc.items()})


def involute_element(f) -> FusionElement:
    f = as_element(f)
    return FusionElement._trusted({involute(w): c for w, c in f._coeffs.items()})


@lru_cache(maxsize=None)
def _J(s: str) -> tuple[tuple[str, int], ...]:
    if not s:
        return (("", 1),)
    head, tail = s[0], _J(s[1:])
    acc: Counter = Counter()
    for y, c in tail:
        # letter (.) y = letter y + y[1:] when y starts with the opposite letter
        acc[head + y] += c
        if y and y[0] != head:
            acc[y[1:]] += c
    return tuple(acc.items())


def J_expand(x: Word) -> FusionElement:
    """Multiplicities of the irreducibles r_w inside the tensor word u^x.

    Computed as ``x1 (.) (x2 (.) (... (.) e))``.
    """
    return FusionElement._trusted({Word(s): c for s, c in _J(x.letters)})


def J_expand_element(f) -> FusionElement:
    f = as_element(f)
    acc: Counter = Counter()
    for w, c in f._coeffs.items():
        for s, m in _J(w.letters):
            acc[s] += c * m
    return FusionElement._trusted({Word(s): c for s, c in acc.items()})


def J_inverse(g) -> FusionElement:
    """Solve ``J(f) = g`` by the finite Neumann series sum (Id - J)^i g.

    (J - Id) strictly lowers the maximal word length, so the series stops
    after at most ``g.max_length + 1`` terms.
    """
    g = as_element(g)
    total = g
    term = g
    for _ in range(g.max_length + 1):
        term = term - J_expand_element(term)
        if not term:
            break
        total = total + term
    if term:  # pragma: no cover - guarded by nilpotence
        raise FreeQGError("Neumann series for J^-1 did not terminate")
    return total


def tau(f) -> int:
    """Coefficient of the empty word."""
    return as_element(f).get(E, 0)


def star_moment(w: Word) -> int:
    """dim Mor(1, u^w): the w-patterned *-moment of chi(u)."""
    return dict(_J(w.letters)).get("", 0)


@lru_cache(maxsize=None)
def _catalan_word(s: str) -> int:
    if not s:
        return 1
    head, rest = s[0], s[1:]
    other = "b" if head == "a" else "a"
    total = 0
    # s = head x other y
    for j, c in enumerate(rest):
        if c == other:
            total += _catalan_word(rest[:j]) * _catalan_word(rest[j + 1 :])
    return total


def generalized_catalan(w: Word) -> int:
    """C_w via C_e = 1, C_a = C_b = 0 and C_w = sum C_x C_y over w = a x b y / b x a y."""
    return _catalan_word(w.letters)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n <= 1:
        raise FreeQGError(f"n must be an integer >= 2, got {n!r}")


def dim_u(w: Word, n: int) -> int:
    """Dimension of r_w for A_u(F) with F of size n."""
    _check_n(n)
    # d[i] = dim of the suffix w[i:], built right to left
    s = w.letters
    d = [0] * (len(s) + 2)
    d[len(s)] = 1
    for i in range(len(s) - 1, -1, -1):
        d[i] = n * d[i + 1]
        if i + 1 < len(s) and s[i + 1] != s[i]:
            d[i] -= d[i + 2]
    return d[0]


def dim_element(f, n: int) -> int:
    f = as_element(f)
    return sum(c * dim_u(w, n) for w, c in f.items())


def _check_weight(k) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise FreeQGError(f"A_o weights are non-negative integers, got {k!r}")
    return k


def fuse_o(k: int, s: int) -> Counter:
    """r_k (x) r_s = r_|k-s| + r_|k-s|+2 + ... + r_k+s for A_o(F)."""
    k, s = _check_weight(k), _check_weight(s)
    return Counter(range(abs(k - s), k + s + 1, 2))


def dim_o(k: int, n: int) -> int:
    """d_0 = 1, d_1 = n, d_{k+1} = n d_k - d_{k-1}."""
    _check_n(n)
    k = _check_weight(k)
    prev, cur = 1, n
    if k == 0:
        return 1
    for _ in range(k - 1):
        prev, cur = cur, n * cur - prev
    return cur


def catalan_closed(k: int) -> int:
    """(2k)! / (k! (k+1)!)."""
    if not isinstance(k, int) or k < 0:
        raise FreeQGError(f"k must be a non-negative integer, got {k!r}")
    return comb(2 * k, k) // (k + 1)

