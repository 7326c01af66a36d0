"""Weight-graded chain spaces and boundary operators.

A degree-m chain of weight w is a wedge of m distinct generators (basis
words of degree >= 1) whose weights add up to w.  Grouping generators by
degree, a chain space decomposes over Young shapes ``[k_1, .., k_l]``:
``k_j`` generators of degree j, with ``sum k_j = m`` and, since torus
words have weight equal to degree, ``sum j k_j = w`` (for polynomial
words, whose weight is degree - 2, the area is ``w + 2m``).  Each ``k_j``
is capped by the number of degree-j generators.

Wedge words are stored as strictly increasing tuples of global generator
indices; the global order enumerates degree 1 first, then degree 2 and so
on, lexicographically within a degree.  The boundary operator

    d(x_1 ^ .. ^ x_m) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ .. ^ x_i^ .. x_j^ ..

(hatted factors omitted) is assembled column by column into a sparse
matrix over the rationals.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, insort
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .basis import BasisKind, BasisWord, dim_graded_piece, enumerate_graded_piece, graded_index
from .bracket import PoissonStructure, _word_bracket
from .linalg import SparseRationalMatrix

WedgeWord = tuple  # strictly increasing tuple of global generator indices


@dataclass(frozen=True)
class YoungShape:
    """Row-width multiplicities [k_1, .., k_l] with k_l > 0 (or empty)."""

    k: tuple[int, ...]

    def __post_init__(self):
        if self.k and self.k[-1] == 0:
            raise ValueError("trailing zero row width")
        if any(x < 0 for x in self.k):
            raise ValueError("negative multiplicity")

    @property
    def length(self) -> int:
        return sum(self.k)

    @property
    def area(self) -> int:
        return sum(j * kj for j, kj in enumerate(self.k, start=1))


def young_shapes(area: int, length: int, caps=None) -> list[YoungShape]:
    """All shapes of the given area and length, in lexicographic order.

    ``caps`` maps a width j (1-based) to the maximal multiplicity of rows
    of that width; ``None`` (for the whole argument or a single width)
    means unlimited.
    """
    if area < 0 or length < 0 or area < length:
        return []
    out: list[YoungShape] = []

    def cap(j):
        if caps is None:
            return None
        return caps(j)

    def recurse(j, rows_left, area_left, prefix):
        if rows_left == 0:
            if area_left == 0:
                trimmed = list(prefix)
                while trimmed and trimmed[-1] == 0:
                    trimmed.pop()
                out.append(YoungShape(tuple(trimmed)))
            return
        if area_left < j * rows_left:
            return
        top = min(rows_left, area_left // j)
        cj = cap(j)
        if cj is not None:
            top = min(top, cj)
        for kj in range(top + 1):
            recurse(j + 1, rows_left - kj, area_left - j * kj, prefix + [kj])

    recurse(1, length, area, [])
    return out


@lru_cache(maxsize=None)
def _degree_offsets(n: int, kind: BasisKind, max_degree: int) -> tuple[int, ...]:
    """offsets[j] = global index of the first degree-j generator, j >= 1."""
    offs = [0, 0]
    for j in range(1, max_degree + 1):
        offs.append(offs[-1] + dim_graded_piece(n, j, kind))
    return tuple(offs)


def _shape_area(w: int, m: int, kind: BasisKind) -> int:
    return w if kind.on_torus else w + 2 * m


@dataclass(frozen=True)
class ChainBasis:
    """Ordered wedge-word basis of the degree-m, weight-w chain space."""

    w: int
    m: int
    n: int
    kind: BasisKind
    pi: PoissonStructure
    shapes: tuple[YoungShape, ...]
    words: tuple[WedgeWord, ...]
    index: dict = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.words)


def chain_dim(w: int, m: int, n: int, kind: BasisKind, pi: PoissonStructure | None = None) -> int:
    """Dimension of the chain space, counted shape by shape."""
    if m == 0:
        return 1 if w == 0 else 0
    area = _shape_area(w, m, kind)
    total = 0
    for shape in young_shapes(area, m, lambda j: dim_graded_piece(n, j, kind)):
        prod = 1
        for j, kj in enumerate(shape.k, start=1):
            if kj:
                prod *= comb(dim_graded_piece(n, j, kind), kj)
        total += prod
    return total


def chain_basis(w: int, m: int, n: int, kind: BasisKind, pi: PoissonStructure) -> ChainBasis:
    """Enumerate the canonical wedge-word basis of the chain space."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    area = _shape_area(w, m, kind)
    shapes = tuple(young_shapes(area, m, lambda j: dim_graded_piece(n, j, kind)))
    max_degree = max((len(s.k) for s in shapes), default=0)
    offsets = _degree_offsets(n, kind, max_degree) if max_degree else (0, 0)
    words: list[WedgeWord] = []
    for shape in shapes:
        pools = []
        for j, kj in enumerate(shape.k, start=1):
            if kj:
                base = offsets[j]
                dim_j = dim_graded_piece(n, j, kind)
                pools.append(itertools.combinations(range(base, base + dim_j), kj))
        for pick in itertools.product(*pools):
            words.append(tuple(itertools.chain.from_iterable(pick)))
    index = {word: i for i, word in enumerate(words)}
    return ChainBasis(w, m, n, kind, pi, shapes, tuple(words), index)


def _generator_words(n: int, kind: BasisKind, max_degree: int) -> list[BasisWord]:
    """Global-index-aligned list of all generators of degree <= max_degree."""
    out: list[BasisWord] = []
    for j in range(1, max_degree + 1):
        out.extend(enumerate_graded_piece(n, j, kind))
    return out


def normalize_wedge(indices) -> tuple[int, WedgeWord] | None:
    """Sort generator indices; returns (permutation sign, word) or None."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None
    sign = 1
    ordered: list[int] = []
    for g in idx:
        pos = bisect_left(ordered, g)
        if (len(ordered) - pos) % 2:
            sign = -sign
        insort(ordered, g)
    return sign, tuple(ordered)


def boundary_matrix(
    w: int,
    m: int,
    n: int,
    kind: BasisKind,
    pi: PoissonStructure,
    source: ChainBasis | None = None,
    target: ChainBasis | None = None,
) -> SparseRationalMatrix:
    """Matrix of the boundary operator from degree m to degree m - 1."""
    if m < 2:
        raise ValueError("the boundary on degree-1 chains is the zero map")
    if source is None:
        source = chain_basis(w, m, n, kind, pi)
    if target is None:
        target = chain_basis(w, m - 1, n, kind, pi)
    if not source.words or not target.words:
        return SparseRationalMatrix.from_dict(target.dim, source.dim, {})

    max_degree = _shape_area(w, m, kind)
    gens = _generator_words(n, kind, max_degree)
    offsets = _degree_offsets(n, kind, max_degree)
    idx_maps = [graded_index(n, j, kind) for j in range(max_degree + 1)]

    def global_index(word: BasisWord) -> int:
        d = word.degree
        return offsets[d] + idx_maps[d][word]

    pair_cache: dict[tuple[int, int], list] = {}

    def bracket_terms(ga: int, gb: int):
        key = (ga, gb)
        hit = pair_cache.get(key)
        if hit is None:
            terms = []
            for word, coeff in _word_bracket(gens[ga], gens[gb], pi).items():
                if word.degree == 0:
                    continue  # central part, not a chain generator
                terms.append((global_index(word), coeff))
            pair_cache[key] = hit = terms
        return hit

    entries: dict[tuple[int, int], Fraction] = {}
    target_index = target.index
    for col, word in enumerate(source.words):
        for i in range(m - 1):
            for j in range(i + 1, m):
                pos_sign = -1 if (i + j) % 2 else 1  # (-1)^{(i+1)+(j+1)}
                rest = word[:i] + word[i + 1 : j] + word[j + 1 :]
                for g, coeff in bracket_terms(word[i], word[j]):
                    pos = bisect_left(rest, g)
                    if pos < len(rest) and rest[pos] == g:
                        continue
                    sign = pos_sign * (-1 if pos % 2 else 1)
                    row = target_index[rest[:pos] + (g,) + rest[pos:]]
                    val = entries.get((row, col), 0) + sign * coeff
                    if val:
                        entries[(row, col)] = val
                    else:
                        entries.pop((row, col), None)
    return SparseRationalMatrix.from_dict(target.dim, source.dim, entries)
