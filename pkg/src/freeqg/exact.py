"""Exact arithmetic over the Gaussian rationals Q(i).

:class:`GaussianRational` is a pair of :class:`fractions.Fraction`.
:class:`ExactMatrix` is a dense matrix of them.  Ranks are computed by
fraction-free (Bareiss) elimination over the Gaussian integers after
clearing denominators row by row, so every intermediate division is exact.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionError, FreeQGError, SingularMatrixError

__all__ = [
    "GaussianRational",
    "ExactMatrix",
    "gq",
    "ZERO",
    "ONE",
    "bareiss_rank",
    "random_invertible",
    "parse_rational",
    "format_rational",
]


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    def __add__(self, other):
        if type(other) is not GaussianRational:
            other = gq(other)
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            other = gq(other)
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return gq(other) - self

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            other = gq(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._make(a * c, b)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            other = gq(other)
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational._make(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return gq(other) / self

    def conjugate(self) -> GaussianRational:
        return GaussianRational._make(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if type(other) is not GaussianRational:
            try:
                other = gq(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_pair(self) -> list[str]:
        return [format_rational(self.re), format_rational(self.im)]


ZERO = GaussianRational._make(Fraction(0), Fraction(0))
ONE = GaussianRational._make(Fraction(1), Fraction(0))


def gq(x) -> GaussianRational:
    """Coerce ints, Fractions, strings, ``(re, im)`` pairs and Python complex with integer parts."""
    if type(x) is GaussianRational:
        return x
    if isinstance(x, (int, Rational)):
        return GaussianRational._make(Fraction(x), Fraction(0))
    if isinstance(x, str):
        return GaussianRational._make(parse_rational(x), Fraction(0))
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise TypeError("only complex numbers with integer parts convert exactly")
        return GaussianRational(int(x.real), int(x.imag))
    if isinstance(x, (tuple, list)) and len(x) == 2:
        re, im = (parse_rational(v) if isinstance(v, str) else Fraction(v) for v in x)
        return GaussianRational._make(re, im)
    raise TypeError(f"cannot convert {x!r} to a Gaussian rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise FreeQGError(f"not a rational 'p/q': {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# --- Gaussian-integer helpers for fraction-free elimination -------------------

def _gi_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _gi_exact_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        raise ArithmeticError("inexact division in Bareiss elimination")
    return re // n, im // n


def _to_gaussian_integer_rows(rows: Sequence[Sequence[GaussianRational]]) -> list[list[tuple[int, int]]]:
    out = []
    for row in rows:
        den = 1
        for z in row:
            den = lcm(den, z.re.denominator, z.im.denominator)
        out.append([(int(z.re * den), int(z.im * den)) for z in row])
    return out


def bareiss_rank(rows: Sequence[Sequence[GaussianRational]]) -> int:
    """Rank over Q(i) by fraction-free row echelon elimination in Z[i]."""
    m = _to_gaussian_integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = (1, 0)
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != (0, 0)), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            for j in range(c + 1, ncols):
                x = _gi_mul(p, m[i][j])
                y = _gi_mul(a, m[r][j])
                m[i][j] = _gi_exact_div((x[0] - y[0], x[1] - y[1]), prev)
            m[i][c] = (0, 0)
        prev = p
        r += 1
        if r == nrows:
            break
    return r


class ExactMatrix:
    """Dense matrix with Gaussian-rational entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = [[gq(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("ragged matrix rows")

    @classmethod
    def _trusted(cls, rows: list[list[GaussianRational]], ncols: int | None = None) -> ExactMatrix:
        obj = object.__new__(cls)
        obj.rows = rows
        obj.nrows = len(rows)
        obj.ncols = len(rows[0]) if rows else (ncols or 0)
        return obj

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls._trusted([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> ExactMatrix:
        return cls._trusted([[ZERO] * ncols for _ in range(nrows)], ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix._trusted(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix._trusted(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def scale(self, c) -> ExactMatrix:
        c = gq(c)
        return ExactMatrix._trusted([[c * a for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([_dot(nz, col) for col in cols] if cols else [])
        return ExactMatrix._trusted(out, other.ncols)

    def conj(self) -> ExactMatrix:
        return ExactMatrix._trusted([[a.conjugate() for a in r] for r in self.rows], self.ncols)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix._trusted([list(c) for c in zip(*self.rows)], self.nrows)

    def adjoint(self) -> ExactMatrix:
        return ExactMatrix._trusted(
            [[a.conjugate() for a in c] for c in zip(*self.rows)], self.nrows
        )

    def trace(self) -> GaussianRational:
        t = ZERO
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.rows[i][i]
        return t

    def rank(self) -> int:
        return bareiss_rank(self.rows)

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def scalar_value(self) -> GaussianRational | None:
        """c if the matrix equals c times the identity, else None."""
        if not self.is_square:
            return None
        c = self.rows[0][0] if self.rows else ZERO
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a != (c if i == j else ZERO):
                    return None
        return c

    def inverse(self) -> ExactMatrix:
        """Gauss-Jordan inverse; raises SingularMatrixError."""
        if not self.is_square:
            raise DimensionError("only square matrices are invertible")
        n = self.nrows
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            inv_p = ONE / a[c][c]
            a[c] = [x * inv_p for x in a[c]]
            for i in range(n):
                if i != c and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return ExactMatrix._trusted([r[n:] for r in a], n)

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.nrows

    # --- serialization -------------------------------------------------------

    def to_json(self) -> str:
        if not self.is_square:
            raise DimensionError("the matrix file format holds square matrices only")
        doc = {"n": self.nrows, "entries": [a.to_pair() for r in self.rows for a in r]}
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ExactMatrix:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FreeQGError(f"matrix file is not valid JSON: {exc}") from exc
        try:
            n = doc["n"]
            entries = doc["entries"]
        except (KeyError, TypeError) as exc:
            raise FreeQGError("matrix file needs keys 'n' and 'entries'") from exc
        if not isinstance(n, int) or n < 1 or not isinstance(entries, list) or len(entries) != n * n:
            raise DimensionError(f"expected n >= 1 and n*n entries, got n={n!r}")
        vals = []
        for e in entries:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
                raise FreeQGError(f"entry must be a pair of rational strings, got {e!r}")
            vals.append(GaussianRational._make(parse_rational(e[0]), parse_rational(e[1])))
        return cls._trusted([vals[i * n : (i + 1) * n] for i in range(n)], n)

    @classmethod
    def load(cls, path) -> ExactMatrix:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    def tolist(self) -> list[list[list[str]]]:
        return [[a.to_pair() for a in r] for r in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"ExactMatrix([{body}])"


def _dot(nz: list[tuple[int, GaussianRational]], col: Sequence[GaussianRational]) -> GaussianRational:
    t = ZERO
    for k, a in nz:
        b = col[k]
        if b:
            t = t + a * b
    return t


_ENTRY_POOL = [Fraction(p, q) for p in range(-3, 4) for q in (1, 2, 3)]


def random_invertible(n: int, seed: int, pool: Sequence[Fraction] = _ENTRY_POOL) -> ExactMatrix:
    """Seeded random invertible matrix with small Gaussian-rational entries."""
    rng = random.Random(seed)
    while True:
        m = ExactMatrix._trusted(
            [[GaussianRational(rng.choice(pool), rng.choice(pool)) for _ in range(n)] for _ in range(n)],
            n,
        )
        if m.is_invertible():
            return m
