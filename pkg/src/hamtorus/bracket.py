"""Reduced Poisson brackets for constant Poisson tensors.

The bracket of two graded words is computed compositionally from
``differentiate`` and ``multiply_top``:

    {F, G} = sum_i  dF/dx_{2i-1} * dG/dx_{2i}  -  dF/dx_{2i} * dG/dx_{2i-1}

over the symplectic pairs of the structure.  Since every factor keeps only
its top-degree part, the result is the top-degree part of the honest
Poisson bracket, which is bilinear, antisymmetric, satisfies the Jacobi
identity and adds weights.

The closed 2-torus formulas (`bracket_t2_product_oracle`,
`bracket_t2_fourier_oracle`) are kept purely as independent cross-checks;
nothing in the assembly of boundary operators uses them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .basis import BasisKind, BasisWord, LinearCombination, differentiate, multiply_top


@dataclass(frozen=True)
class PoissonStructure:
    """Constant Poisson tensor pairing the first ``rank2m`` coordinates.

    The tensor is d/dx_1 ^ d/dx_2 + ... + d/dx_{2m-1} ^ d/dx_{2m}; it is
    symplectic when ``rank2m == n``.
    """

    n: int
    rank2m: int
    homogeneity: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if self.rank2m % 2 or not 0 < self.rank2m <= self.n:
            raise ValueError("rank must be a positive even number <= n")
        if self.homogeneity != 0:
            raise ValueError("only constant-coefficient tensors are supported")

    @classmethod
    def symplectic(cls, n: int) -> "PoissonStructure":
        if n % 2:
            raise ValueError("symplectic structure needs even dimension")
        return cls(n, n)

    @classmethod
    def degenerate(cls, n: int, m: int) -> "PoissonStructure":
        return cls(n, 2 * m)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """0-based coordinate pairs carrying the pairing."""
        return tuple((2 * i, 2 * i + 1) for i in range(self.rank2m // 2))


def _word_bracket(u: BasisWord, v: BasisWord, pi: PoissonStructure) -> dict:
    """Bracket of two basis words as a plain word -> Fraction dict."""
    acc: dict[BasisWord, Fraction] = {}
    for i, j in pi.pairs:
        for left, right, sign in ((i, j, 1), (j, i, -1)):
            du = differentiate(u, left + 1)
            if not du:
                continue
            dv = differentiate(v, right + 1)
            if not dv:
                continue
            (wu, cu), = du.items()
            (wv, cv), = dv.items()
            (word, cw), = multiply_top(wu, wv).items()
            val = acc.get(word, 0) + sign * cu * cv * cw
            if val:
                acc[word] = val
            else:
                acc.pop(word, None)
    return acc


def _as_combination(f) -> LinearCombination:
    if isinstance(f, BasisWord):
        return LinearCombination.of(f)
    return f


def bracket_top(f, g, pi: PoissonStructure) -> LinearCombination:
    """Top-degree Poisson bracket of two homogeneous combinations."""
    F, G = _as_combination(f), _as_combination(g)
    acc: dict[BasisWord, Fraction] = {}
    for u, cu in F.items():
        if u.n != pi.n:
            raise ValueError("word dimension does not match the structure")
        for v, cv in G.items():
            if v.kind is not u.kind or v.n != u.n:
                raise ValueError("mixed kinds or dimensions in bracket")
            for word, cw in _word_bracket(u, v, pi).items():
                val = acc.get(word, 0) + cu * cv * cw
                if val:
                    acc[word] = val
                else:
                    acc.pop(word, None)
    return LinearCombination(acc)


def _det2(x, y) -> int:
    return x[0] * y[1] - x[1] * y[0]


def bracket_t2_product_oracle(A, P, B, Q) -> LinearCombination:
    """Closed form for the 2-torus bracket of product words.

    Valid only when A + B - [1,1] stays componentwise non-negative; the
    coefficient is the sum of the four 2x2 determinants |A,B|, |A,Q|,
    |P,B|, |P,Q| and the cosine overflow is modulated away afterwards.
    """
    A, P, B, Q = tuple(A), tuple(P), tuple(B), tuple(Q)
    for vec in (A, B):
        if len(vec) != 2 or any(x < 0 for x in vec):
            raise ValueError("sine indices must be pairs of naturals")
    for vec in (P, Q):
        if len(vec) != 2 or any(x not in (0, 1) for x in vec):
            raise ValueError("cosine indices must be pairs in {0,1}")
    sin = (A[0] + B[0] - 1, A[1] + B[1] - 1)
    if sin[0] < 0 or sin[1] < 0:
        raise ValueError("outside the oracle's validity domain")
    coeff = _det2(A, B) + _det2(A, Q) + _det2(P, B) + _det2(P, Q)
    if coeff == 0:
        return LinearCombination.zero()
    cos = [P[0] + Q[0] + 1, P[1] + Q[1] + 1]
    sin = list(sin)
    flips = 0
    for i in range(2):
        if cos[i] >= 2:
            cos[i] -= 2
            sin[i] += 2
            flips += 1
    sign = -1 if flips % 2 else 1
    return LinearCombination.of(BasisWord.product(sin, cos), sign * coeff)


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _swap_slots(comb: LinearCombination) -> LinearCombination:
    return LinearCombination(
        {BasisWord.fourier((w.exps[1], w.exps[0])): c for w, c in comb.items()}
    )


def bracket_t2_fourier_oracle(a, b) -> LinearCombination:
    """Closed form for the 2-torus bracket of Fourier words.

    Covers every sign pattern of (a1*b1, a2*b2) by the case formulas for
    the six canonical patterns plus the two symmetries: swapping the
    arguments or the two coordinate slots negates the bracket.
    """
    a, b = tuple(a), tuple(b)
    s1, s2 = _sgn(a[0] * b[0]), _sgn(a[1] * b[1])
    order = {0: 0, 1: 1, -1: 2}
    if order[s1] > order[s2]:
        swapped = bracket_t2_fourier_oracle((a[1], a[0]), (b[1], b[0]))
        return -_swap_slots(swapped)
    if s1 == 0:
        if a[0] == 0 and b[0] == 0:
            return LinearCombination.zero()
        if a[0] == 0:
            return -bracket_t2_fourier_oracle(b, a)
        # now a1 != 0, b1 == 0
        if s2 == 0:
            if b[1] == 0:  # second argument is the constant word
                return LinearCombination.zero()
            coeff = Fraction(a[0] * b[1])
            word = BasisWord.fourier((-a[0], -b[1]))
        elif s2 == 1:
            coeff = Fraction(a[0] * b[1], 2)
            word = BasisWord.fourier((-a[0], abs(a[1]) + abs(b[1])))
        else:
            coeff = Fraction(-_sgn(a[1]) * a[0] * b[1], 2)
            word = BasisWord.fourier((-a[0], -abs(a[1]) - abs(b[1])))
    elif s1 == 1:
        if s2 == 1:
            coeff = Fraction(a[0] * b[1] - a[1] * b[0], 4)
            word = BasisWord.fourier((abs(a[0]) + abs(b[0]), abs(a[1]) + abs(b[1])))
        else:
            coeff = Fraction(-_sgn(a[1]) * (a[0] * b[1] + a[1] * b[0]), 4)
            word = BasisWord.fourier((abs(a[0]) + abs(b[0]), -abs(a[1]) - abs(b[1])))
    else:
        coeff = Fraction(-_sgn(a[0]) * _sgn(a[1]) * (a[0] * b[1] - a[1] * b[0]), 4)
        word = BasisWord.fourier((-abs(a[0]) - abs(b[0]), -abs(a[1]) - abs(b[1])))
    return LinearCombination({word: coeff})


def cokernel_witnesses_t2(w: int, kind: BasisKind) -> list[BasisWord]:
    """Four degree-w words spanning the cokernel of the 2-torus bracket.

    These are the pure one-variable words: no bracket of lower-degree
    words can produce them, and together with the bracket images they
    fill the whole degree-w piece.
    """
    if w < 1:
        raise ValueError("positive weight required")
    if kind is BasisKind.PRODUCT:
        return [
            BasisWord.product((w, 0), (0, 0)),
            BasisWord.product((0, w), (0, 0)),
            BasisWord.product((0, w - 1), (0, 1)),
            BasisWord.product((w - 1, 0), (1, 0)),
        ]
    if kind is BasisKind.FOURIER:
        return [
            BasisWord.fourier((w, 0)),
            BasisWord.fourier((-w, 0)),
            BasisWord.fourier((0, w)),
            BasisWord.fourier((0, -w)),
        ]
    raise ValueError("witnesses exist for the torus bases only")
