"""Graded bases of the function algebras on tori and on R^n.

Three families of basis words are supported:

* product words ``sin^{a_1}x_1 .. sin^{a_n}x_n cos^{b_1}x_1 .. cos^{b_n}x_n``
  with ``a_i`` a natural number and ``b_i`` in ``{0, 1}``,
* Fourier words ``s(c_1 x_1) .. s(c_n x_n)`` where a positive slot ``c``
  stands for ``sin(c x)`` and a non-positive slot for ``cos(c x)``,
* polynomial monomials ``x_1^{a_1} .. x_n^{a_n}`` on R^n.

The torus words of degree k represent classes in the quotient of the span
of words of degree <= k by the span of words of degree < k, so products
and derivatives keep only their top-degree part.  Concretely, ``cos^2`` is
rewritten as ``-sin^2`` whenever a product stacks two cosines in one slot
("modulation"), and the lower-degree remainder is dropped.  All
coefficients are exact rationals.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb


class BasisKind(enum.Enum):
    PRODUCT = "product"
    FOURIER = "fourier"
    POLYNOMIAL = "polynomial"

    @property
    def on_torus(self) -> bool:
        return self is not BasisKind.POLYNOMIAL


@dataclass(frozen=True)
class BasisWord:
    """One monomial generator; ``exps`` is the raw exponent tuple.

    For PRODUCT words ``exps`` has length 2n (sine exponents followed by
    cosine exponents), for the other kinds length n.
    """

    kind: BasisKind
    n: int
    exps: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        k, n, e = self.kind, self.n, self.exps
        if k is BasisKind.PRODUCT:
            if len(e) != 2 * n:
                raise ValueError("product word needs 2n exponents")
            if any(x < 0 for x in e) or any(b not in (0, 1) for b in e[n:]):
                raise ValueError("bad product exponents")
        else:
            if len(e) != n:
                raise ValueError("word needs n exponents")
            if k is not BasisKind.FOURIER and any(x < 0 for x in e):
                raise ValueError("negative exponent")

    @classmethod
    def product(cls, a, b) -> "BasisWord":
        a, b = tuple(a), tuple(b)
        return cls(BasisKind.PRODUCT, len(a), a + b)

    @classmethod
    def fourier(cls, c) -> "BasisWord":
        c = tuple(c)
        return cls(BasisKind.FOURIER, len(c), c)

    @classmethod
    def polynomial(cls, a) -> "BasisWord":
        a = tuple(a)
        return cls(BasisKind.POLYNOMIAL, len(a), a)

    @classmethod
    def unit(cls, kind: BasisKind, n: int) -> "BasisWord":
        width = 2 * n if kind is BasisKind.PRODUCT else n
        return cls(kind, n, (0,) * width)

    @property
    def sin_exponents(self) -> tuple[int, ...]:
        if self.kind is not BasisKind.PRODUCT:
            raise ValueError("not a product word")
        return self.exps[: self.n]

    @property
    def cos_exponents(self) -> tuple[int, ...]:
        if self.kind is not BasisKind.PRODUCT:
            raise ValueError("not a product word")
        return self.exps[self.n :]

    @property
    def degree(self) -> int:
        if self.kind is BasisKind.FOURIER:
            return sum(abs(c) for c in self.exps)
        return sum(self.exps)

    @property
    def weight(self) -> int:
        # torus words sit over a constant (0-homogeneous) Poisson tensor,
        # polynomial monomials lose 2 from the bracket's differentiations
        if self.kind.on_torus:
            return self.degree
        return self.degree - 2

    def __repr__(self):
        if self.kind is BasisKind.PRODUCT:
            return f"z[{list(self.sin_exponents)};{list(self.cos_exponents)}]"
        if self.kind is BasisKind.FOURIER:
            return f"Z[{list(self.exps)}]"
        return f"x^{list(self.exps)}"


class LinearCombination:
    """Finite rational linear combination of same-degree basis words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[BasisWord, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[word] = coeff
        if len(clean) > 1:
            first = next(iter(clean))
            for word in clean:
                if (word.kind, word.n, word.degree) != (
                    first.kind,
                    first.n,
                    first.degree,
                ):
                    raise ValueError("mixed words in one combination")
        self.terms = clean

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls()

    @classmethod
    def of(cls, word: BasisWord, coeff=1) -> "LinearCombination":
        return cls({word: Fraction(coeff)})

    def items(self):
        return self.terms.items()

    @property
    def degree(self):
        if not self.terms:
            return None
        return next(iter(self.terms)).degree

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, word: BasisWord) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = out.get(word, 0) + coeff
            if acc:
                out[word] = acc
            else:
                out.pop(word, None)
        return LinearCombination(out)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + (-other)

    def __neg__(self) -> "LinearCombination":
        return LinearCombination({w: -c for w, c in self.terms.items()})

    def scaled(self, factor) -> "LinearCombination":
        factor = Fraction(factor)
        if not factor:
            return LinearCombination()
        return LinearCombination({w: c * factor for w, c in self.terms.items()})

    __mul__ = scaled
    __rmul__ = scaled

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"{c}*{w!r}" for w, c in sorted(self.terms.items(), key=lambda t: t[0].exps)]
        return " + ".join(bits)


def dim_graded_piece(n: int, k: int, kind: BasisKind) -> int:
    """Dimension of the span of degree-k basis words in n variables."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if k < 0:
        return 0
    if kind is BasisKind.PRODUCT:
        return sum(comb(n, a) * comb(n - 1 + k - a, n - 1) for a in range(min(n, k) + 1))
    if kind is BasisKind.FOURIER:
        if k == 0:
            return 1
        return sum(
            comb(n, l) * comb(k - 1, l - 1) * 2**l for l in range(1, min(n, k) + 1)
        )
    return comb(n - 1 + k, n - 1)


def _weak_compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _weak_compositions(total - head, parts - 1):
            yield (head,) + rest


@lru_cache(maxsize=None)
def enumerate_graded_piece(n: int, k: int, kind: BasisKind) -> tuple[BasisWord, ...]:
    """All degree-k words, sorted by their raw exponent tuple."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if k < 0:
        return ()
    words = []
    if kind is BasisKind.PRODUCT:
        for ones in range(min(n, k) + 1):
            for spots in itertools.combinations(range(n), ones):
                b = [0] * n
                for i in spots:
                    b[i] = 1
                for a in _weak_compositions(k - ones, n):
                    words.append(BasisWord(kind, n, a + tuple(b)))
    elif kind is BasisKind.FOURIER:
        for magnitudes in _weak_compositions(k, n):
            support = [i for i, m in enumerate(magnitudes) if m]
            for signs in itertools.product((1, -1), repeat=len(support)):
                c = list(magnitudes)
                for i, s in zip(support, signs):
                    c[i] *= s
                words.append(BasisWord(kind, n, tuple(c)))
    else:
        for a in _weak_compositions(k, n):
            words.append(BasisWord(kind, n, a))
    words.sort(key=lambda w: w.exps)
    return tuple(words)


@lru_cache(maxsize=None)
def graded_index(n: int, k: int, kind: BasisKind) -> dict[BasisWord, int]:
    """O(1) word -> position lookup for ``enumerate_graded_piece``."""
    return {w: i for i, w in enumerate(enumerate_graded_piece(n, k, kind))}


def psi_map(word: BasisWord) -> BasisWord:
    """Slot-wise index bijection from product words onto Fourier words.

    A slot carrying ``sin^a cos`` maps to ``a + 1`` and one carrying plain
    ``sin^a`` maps to ``-a``; the map preserves degree.
    """
    if word.kind is not BasisKind.PRODUCT:
        raise ValueError("psi_map expects a product word")
    n = word.n
    a, b = word.sin_exponents, word.cos_exponents
    c = tuple(a[i] + 1 if b[i] else -a[i] for i in range(n))
    return BasisWord(BasisKind.FOURIER, n, c)


def _check_compatible(u: BasisWord, v: BasisWord):
    if u.kind is not v.kind or u.n != v.n:
        raise ValueError("words live in different algebras")


def multiply_top(u: BasisWord, v: BasisWord) -> LinearCombination:
    """Top-degree part of the product u*v; always a single signed word."""
    _check_compatible(u, v)
    n = u.n
    if u.kind is BasisKind.PRODUCT:
        a = [x + y for x, y in zip(u.sin_exponents, v.sin_exponents)]
        q = [x + y for x, y in zip(u.cos_exponents, v.cos_exponents)]
        flips = 0
        for i in range(n):
            if q[i] == 2:  # cos^2 == -sin^2 modulo lower degree
                q[i] = 0
                a[i] += 2
                flips += 1
        word = BasisWord(u.kind, n, tuple(a) + tuple(q))
        return LinearCombination.of(word, Fraction(-1 if flips % 2 else 1))
    if u.kind is BasisKind.FOURIER:
        coeff = Fraction(1)
        slots = []
        for a, b in zip(u.exps, v.exps):
            if a * b == 0:
                slots.append(a + b)
            elif a * b > 0:
                coeff *= Fraction(-1 if a > 0 else 1, 2)
                slots.append(-(abs(a) + abs(b)))
            else:
                coeff *= Fraction(1, 2)
                slots.append(abs(a) + abs(b))
        return LinearCombination.of(BasisWord(u.kind, n, tuple(slots)), coeff)
    word = BasisWord(u.kind, n, tuple(x + y for x, y in zip(u.exps, v.exps)))
    return LinearCombination.of(word)


def differentiate(u: BasisWord, axis: int) -> LinearCombination:
    """Top-degree part of d/dx_axis (1-based axis)."""
    if not 1 <= axis <= u.n:
        raise ValueError("axis out of range")
    j = axis - 1
    if u.kind is BasisKind.PRODUCT:
        a, b = u.exps[j], u.exps[u.n + j]
        coeff = (a + b) * (-1 if b else 1)
        if coeff == 0:
            return LinearCombination.zero()
        e = list(u.exps)
        e[j] = a + 2 * b - 1
        e[u.n + j] = 1 - b
        return LinearCombination.of(BasisWord(u.kind, u.n, tuple(e)), coeff)
    if u.kind is BasisKind.FOURIER:
        c = u.exps[j]
        if c == 0:
            return LinearCombination.zero()
        e = list(u.exps)
        e[j] = -c
        return LinearCombination.of(BasisWord(u.kind, u.n, tuple(e)), c)
    a = u.exps[j]
    if a == 0:
        return LinearCombination.zero()
    e = list(u.exps)
    e[j] = a - 1
    return LinearCombination.of(BasisWord(u.kind, u.n, tuple(e)), a)
