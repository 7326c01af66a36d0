import random
from fractions import Fraction

import pytest

from hamtorus.basis import BasisKind
from hamtorus.bracket import PoissonStructure
from hamtorus.chains import boundary_matrix, chain_dim
from hamtorus.linalg import (
    PrimeDividesDenominator,
    SparseRationalMatrix,
    rank,
    rank_exact,
    rank_modular,
    random_prime,
)

K = BasisKind
PI2 = PoissonStructure.symplectic(2)
P61 = 2305843009213693951  # 2^61 - 1


def from_rows(rows):
    entries = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                entries[(i, j)] = Fraction(v)
    return SparseRationalMatrix.from_dict(len(rows), len(rows[0]) if rows else 0, entries)


def dense_rank_over_Q(rows):
    """Plain fraction Gauss elimination, the slow reference."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank_count, n_rows = 0, len(m)
    n_cols = len(m[0]) if n_rows else 0
    for c in range(n_cols):
        piv = next((r for r in range(rank_count, n_rows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank_count], m[piv] = m[piv], m[rank_count]
        inv = 1 / m[rank_count][c]
        m[rank_count] = [x * inv for x in m[rank_count]]
        for r in range(n_rows):
            if r != rank_count and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank_count])]
        rank_count += 1
    return rank_count


def test_trivial_matrices():
    zero = SparseRationalMatrix.from_dict(3, 4, {})
    assert rank_modular(zero, P61) == 0
    assert rank_exact(zero) == 0
    ident = from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rank_modular(ident, P61) == 3
    assert rank_exact(ident) == 3
    empty = SparseRationalMatrix.from_dict(0, 5, {})
    r, cert = rank(empty)
    assert r == 0 and empty.cols - r == 5


def test_half_entry():
    M = from_rows([[Fraction(1, 2)]])
    assert rank_exact(M) == 1
    assert rank_modular(M, P61) == 1


def test_rank_seven_by_construction():
    rng = random.Random(13)
    while True:
        A = [[rng.randrange(-3, 4) for _ in range(7)] for _ in range(20)]
        B = [[rng.randrange(-3, 4) for _ in range(20)] for _ in range(7)]
        if dense_rank_over_Q(A) == 7 and dense_rank_over_Q(B) == 7:
            break
    prod = [[sum(A[i][k] * B[k][j] for k in range(7)) for j in range(20)] for i in range(20)]
    M = from_rows(prod)
    assert rank_exact(M) == 7
    assert rank_modular(M, P61) == 7
    r, cert = rank(M)
    assert r == 7 and cert.method == "modular" and len(cert.primes) == 2


def test_modular_at_most_exact_and_reference():
    rng = random.Random(31)
    for _ in range(25):
        rows = [[rng.choice((0, 0, 0, 1, -1, 2, Fraction(1, 3)))
                 for _ in range(6)] for _ in range(5)]
        M = from_rows(rows)
        exact = rank_exact(M)
        assert exact == dense_rank_over_Q(rows)
        assert rank_modular(M, P61) <= exact
        assert rank_modular(M, P61) == exact  # huge prime, tiny minors


def test_rank_transpose_invariance():
    rng = random.Random(77)
    for _ in range(50):
        rows = [[rng.choice((0, 0, 1, -2, 3)) for _ in range(7)] for _ in range(5)]
        M = from_rows(rows)
        assert rank_exact(M) == rank_exact(M.transpose())


def test_rank_row_scaling_invariance():
    rng = random.Random(5)
    rows = [[rng.randrange(-2, 3) for _ in range(8)] for _ in range(6)]
    M = from_rows(rows)
    factors = [Fraction(rng.randrange(1, 7), rng.randrange(1, 5)) for _ in range(6)]
    assert rank_exact(M) == rank_exact(M.scale_rows(factors))


def test_prime_collision_detected_and_retried():
    M = from_rows([[Fraction(1, 5), 1], [0, 1]])
    with pytest.raises(PrimeDividesDenominator):
        rank_modular(M, 5)
    r, cert = rank(M)  # random primes far above 5
    assert r == 2


def test_modular_rank_drop_on_bad_prime():
    # entries divisible by 7 lose rank mod 7 but not elsewhere
    M = from_rows([[7, 0], [0, 1]])
    assert rank_modular(M, 7) == 1
    assert rank_modular(M, P61) == 2
    assert rank_exact(M) == 2


def test_modular_matches_exact_on_boundary_matrices():
    for w in range(2, 5):
        for m in range(2, w + 1):
            if chain_dim(w, m, 2, K.PRODUCT) == 0:
                continue
            M = boundary_matrix(w, m, 2, K.PRODUCT, PI2)
            assert rank_modular(M, P61) == rank_exact(M)
            F = boundary_matrix(w, m, 2, K.FOURIER, PI2)
            assert rank_modular(F, P61) == rank_exact(F)


def test_fast_policy_agrees_with_exact_on_t2():
    for w in range(2, 7):
        for m in range(2, w + 1):
            if chain_dim(w, m, 2, K.PRODUCT) == 0:
                continue
            M = boundary_matrix(w, m, 2, K.PRODUCT, PI2)
            fast, cert = rank(M, policy="fast", seed=0)
            assert fast == rank_exact(M)
            assert cert.method == "modular"


def test_rank_policy_validation():
    M = from_rows([[1]])
    with pytest.raises(ValueError):
        rank(M, policy="approximate")


class _ScriptedRng:
    """Feeds chosen values to random_prime, ignoring the requested range."""

    def __init__(self, values):
        self.values = list(values)

    def randrange(self, *_args):
        return self.values.pop(0)


def test_fast_policy_escalates_on_disagreement():
    # rank drops to 1 mod 7 but is 2 mod 11, so the two-prime vote fails
    # and the exact path must settle it
    M = from_rows([[7, 0], [0, 1]])
    r, cert = rank(M, rng=_ScriptedRng([6, 10]))  # next primes: 7, 11
    assert r == 2
    assert cert.method == "exact"
    assert cert.primes == (7, 11)


def test_random_prime_is_large_and_deterministic():
    rng = random.Random(0)
    p = random_prime(rng)
    assert p > 2**60
    assert random_prime(random.Random(0)) == p


def test_matrix_validation():
    with pytest.raises(ValueError):
        SparseRationalMatrix(2, 2, ((0, 0, Fraction(0)),))
    with pytest.raises(ValueError):
        SparseRationalMatrix(2, 2, ((5, 0, Fraction(1)),))
    with pytest.raises(ValueError):
        SparseRationalMatrix(2, 2, ((0, 1, Fraction(1)), (0, 0, Fraction(1))))


def test_augment_columns():
    M = from_rows([[1, 0], [0, 0]])
    aug = M.augment_columns({(1, 0): Fraction(1)})
    assert (aug.rows, aug.cols) == (2, 3)
    assert rank_exact(aug) == 2
