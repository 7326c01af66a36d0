import random

import pytest

from hamtorus.basis import (
    BasisKind,
    BasisWord,
    LinearCombination,
    enumerate_graded_piece,
)
from hamtorus.bracket import (
    PoissonStructure,
    bracket_t2_fourier_oracle,
    bracket_t2_product_oracle,
    bracket_top,
    cokernel_witnesses_t2,
)
from hamtorus.verify import _split_bracket, witness_augmented_rank

K = BasisKind
PI2 = PoissonStructure.symplectic(2)


def _random_word(n, kind, rng, dmax=5):
    d = rng.randrange(1, dmax + 1)
    words = enumerate_graded_piece(n, d, kind)
    return words[rng.randrange(len(words))]


def test_structure_validation():
    with pytest.raises(ValueError):
        PoissonStructure.symplectic(3)
    with pytest.raises(ValueError):
        PoissonStructure(4, 6)
    with pytest.raises(ValueError):
        PoissonStructure(4, 3)
    with pytest.raises(ValueError):
        PoissonStructure(4, 4, homogeneity=1)
    assert PoissonStructure.degenerate(5, 2).pairs == ((0, 1), (2, 3))


def test_bracket_polynomial_example():
    # {x^(a+1), y^(b+1)} = (a+1)(b+1) x^a y^b
    for a in range(4):
        for b in range(4):
            got = bracket_top(
                BasisWord.polynomial((a + 1, 0)),
                BasisWord.polynomial((0, b + 1)),
                PI2,
            )
            want = LinearCombination.of(BasisWord.polynomial((a, b)), (a + 1) * (b + 1))
            assert got == want


def test_bracket_fourier_cos_cos_example():
    # {cos a x1, cos b x2} = a b sin a x1 sin b x2
    for a in range(1, 5):
        for b in range(1, 5):
            got = bracket_top(BasisWord.fourier((-a, 0)), BasisWord.fourier((0, -b)), PI2)
            assert got == LinearCombination.of(BasisWord.fourier((a, b)), a * b)


@pytest.mark.parametrize("kind", list(K))
@pytest.mark.parametrize("n", (2, 4))
def test_bracket_antisymmetry_and_self(kind, n):
    rng = random.Random(100 + n)
    pi = PoissonStructure.symplectic(n)
    for _ in range(200):
        f, g = _random_word(n, kind, rng), _random_word(n, kind, rng)
        assert bracket_top(f, g, pi) == -bracket_top(g, f, pi)
        assert not bracket_top(f, f, pi)


@pytest.mark.parametrize("kind", list(K))
@pytest.mark.parametrize("n", (2, 4))
def test_bracket_jacobi(kind, n):
    rng = random.Random(4242 + n)
    pi = PoissonStructure.symplectic(n)
    for _ in range(200):
        f, g, h = (_random_word(n, kind, rng) for _ in range(3))
        total = (
            bracket_top(bracket_top(f, g, pi), h, pi)
            + bracket_top(bracket_top(g, h, pi), f, pi)
            + bracket_top(bracket_top(h, f, pi), g, pi)
        )
        assert not total


@pytest.mark.parametrize("kind", list(K))
def test_bracket_weight_additive(kind):
    rng = random.Random(9)
    pi = PoissonStructure.symplectic(2)
    drop = 0 if kind.on_torus else 2
    for _ in range(200):
        f, g = _random_word(2, kind, rng), _random_word(2, kind, rng)
        fg = bracket_top(f, g, pi)
        if fg:
            assert fg.degree - drop == f.weight + g.weight


def test_bracket_rejects_mismatch():
    with pytest.raises(ValueError):
        bracket_top(BasisWord.fourier((1, 0, 0)), BasisWord.fourier((1, 0, 0)), PI2)
    with pytest.raises(ValueError):
        bracket_top(
            LinearCombination.of(BasisWord.fourier((1, 0))),
            LinearCombination.of(BasisWord.product((1, 0), (0, 0))),
            PI2,
        )


def test_degenerate_bracket_ignores_unpaired_axes():
    pi = PoissonStructure.degenerate(3, 1)
    # functions of the unpaired coordinate bracket to zero
    f = BasisWord.product((0, 0, 2), (0, 0, 1))
    g = BasisWord.product((1, 1, 0), (0, 0, 0))
    assert not bracket_top(f, BasisWord.product((0, 0, 1), (0, 0, 0)), pi)
    assert bracket_top(f, g, pi) == -bracket_top(g, f, pi)


# --- closed-form oracles ------------------------------------------------


def test_product_oracle_example_word():
    for c1 in range(4):
        for c2 in range(4):
            got = bracket_t2_product_oracle((1 + c1, 0), (0, 0), (0, 1 + c2), (0, 0))
            want = LinearCombination.of(
                BasisWord.product((c1, c2), (1, 1)), (1 + c1) * (1 + c2)
            )
            assert got == want


def test_product_oracle_parallel_vanishes():
    assert not bracket_t2_product_oracle((1, 1), (0, 0), (1, 1), (0, 0))


def test_product_oracle_domain():
    with pytest.raises(ValueError):
        bracket_t2_product_oracle((0, 1), (0, 0), (0, 1), (0, 0))
    with pytest.raises(ValueError):
        bracket_t2_product_oracle((1, 1), (0, 2), (1, 1), (0, 0))


def test_product_oracle_matches_bracket():
    rng = random.Random(55)
    checked = 0
    while checked < 100:
        A = (rng.randrange(0, 5), rng.randrange(0, 5))
        B = (rng.randrange(0, 5), rng.randrange(0, 5))
        if A[0] + B[0] < 1 or A[1] + B[1] < 1:
            continue
        P = (rng.randrange(0, 2), rng.randrange(0, 2))
        Q = (rng.randrange(0, 2), rng.randrange(0, 2))
        checked += 1
        got = bracket_t2_product_oracle(A, P, B, Q)
        ref = bracket_top(BasisWord.product(A, P), BasisWord.product(B, Q), PI2)
        assert got == ref, (A, P, B, Q)


def test_fourier_oracle_case1():
    for a1 in (-3, -1, 2):
        for b2 in (-2, 1, 4):
            got = bracket_t2_fourier_oracle((a1, 0), (0, b2))
            assert got == LinearCombination.of(
                BasisWord.fourier((-a1, -b2)), a1 * b2
            )


def test_fourier_oracle_antisymmetry_diagonal():
    for a in ((1, 2), (-3, 0), (2, -2)):
        assert not bracket_t2_fourier_oracle(a, a)


def test_fourier_oracle_matches_bracket():
    rng = random.Random(77)
    for _ in range(200):
        a = (rng.randrange(-4, 5), rng.randrange(-4, 5))
        b = (rng.randrange(-4, 5), rng.randrange(-4, 5))
        got = bracket_t2_fourier_oracle(a, b)
        ref = bracket_top(BasisWord.fourier(a), BasisWord.fourier(b), PI2)
        assert got == ref, (a, b)


# --- cokernel witnesses -------------------------------------------------


def test_witnesses_fourier_w3():
    got = {w.exps for w in cokernel_witnesses_t2(3, K.FOURIER)}
    assert got == {(3, 0), (-3, 0), (0, 3), (0, -3)}


def test_witnesses_product_w1():
    got = {w.exps for w in cokernel_witnesses_t2(1, K.PRODUCT)}
    assert got == {(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)}


def test_witnesses_reject_weight_zero():
    with pytest.raises(ValueError):
        cokernel_witnesses_t2(0, K.PRODUCT)
    with pytest.raises(ValueError):
        cokernel_witnesses_t2(2, K.POLYNOMIAL)


@pytest.mark.parametrize("kind", (K.PRODUCT, K.FOURIER))
@pytest.mark.parametrize("w", range(1, 7))
def test_witnesses_extend_image_rank(kind, w):
    assert witness_augmented_rank(w, kind)


def test_leibniz_split_t4():
    rng = random.Random(321)
    pi4 = PoissonStructure.symplectic(4)
    for _ in range(200):
        u = BasisWord.product(
            tuple(rng.randrange(0, 3) for _ in range(4)),
            tuple(rng.randrange(0, 2) for _ in range(4)),
        )
        v = BasisWord.product(
            tuple(rng.randrange(0, 3) for _ in range(4)),
            tuple(rng.randrange(0, 2) for _ in range(4)),
        )
        assert bracket_top(u, v, pi4) == _split_bracket(u, v, pi4)
