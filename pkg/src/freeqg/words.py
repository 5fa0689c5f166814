"""The free monoid N*N on two generators alpha ('a') and beta ('b').

Words are immutable and hashable.  The empty word is written ``e``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

from .errors import WordParseError

__all__ = [
    "Letter",
    "Word",
    "E",
    "ALPHA",
    "BETA",
    "involute",
    "splits",
    "parse",
    "format_word",
    "all_words",
    "words_of_length",
    "shortlex_key",
]

_SWAP = str.maketrans("ab", "ba")
_UNICODE = str.maketrans({"α": "a", "β": "b"})


class Letter(str, Enum):
    ALPHA = "a"
    BETA = "b"

    @property
    def bar(self) -> Letter:
        return Letter.BETA if self is Letter.ALPHA else Letter.ALPHA


@dataclass(frozen=True, slots=True)
class Word:
    """Element of N*N stored as a string over ``"ab"``."""

    letters: str = ""

    def __post_init__(self):
        if not isinstance(self.letters, str) or self.letters.strip("ab"):
            raise WordParseError(f"invalid letter sequence {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(c) for c in self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return Letter(self.letters[item])

    def __add__(self, other: Word | Letter) -> Word:
        if isinstance(other, Letter):
            return Word(self.letters + other.value)
        if isinstance(other, Word):
            return Word(self.letters + other.letters)
        return NotImplemented

    def __radd__(self, other: Letter) -> Word:
        if isinstance(other, Letter):
            return Word(other.value + self.letters)
        return NotImplemented

    def __mul__(self, k: int) -> Word:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return Word(self.letters * k)

    def __lt__(self, other: Word) -> bool:
        return shortlex_key(self) < shortlex_key(other)

    def __str__(self) -> str:
        return self.letters or "e"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def startswith(self, prefix: Word) -> bool:
        return self.letters.startswith(prefix.letters)

    def endswith(self, suffix: Word) -> bool:
        return self.letters.endswith(suffix.letters)

    @property
    def bar(self) -> Word:
        return involute(self)


E = Word("")
ALPHA = Word("a")
BETA = Word("b")


def shortlex_key(x: Word) -> tuple[int, str]:
    return len(x.letters), x.letters


def involute(x: Word) -> Word:
    """Antimultiplicative involution: reverse, then swap a <-> b."""
    return Word(x.letters[::-1].translate(_SWAP))


def splits(x: Word) -> list[tuple[Word, Word]]:
    """All factorizations ``x = a + g``, ordered by cut point."""
    s = x.letters
    return [(Word(s[:i]), Word(s[i:])) for i in range(len(s) + 1)]


def parse(text: str) -> Word:
    """Parse ``"e"`` or a nonempty string over ``a``/``b`` (``α``/``β`` also accepted)."""
    if not isinstance(text, str):
        raise WordParseError(f"expected a string, got {type(text).__name__}")
    s = text.strip().translate(_UNICODE)
    if s == "e":
        return E
    if not s or s.strip("ab"):
        raise WordParseError(f"not a word: {text!r} (expected 'e' or [ab]+)")
    return Word(s)


def format_word(x: Word) -> str:
    return str(x)


def words_of_length(n: int) -> Iterator[Word]:
    for t in product("ab", repeat=n):
        yield Word("".join(t))


def all_words(max_len: int) -> Iterator[Word]:
    """All words of length <= max_len in shortlex order."""
    for n in range(max_len + 1):
        yield from words_of_length(n)
