import itertools

import pytest

from hamtorus.basis import BasisKind
from hamtorus.bracket import PoissonStructure
from hamtorus.chains import (
    YoungShape,
    boundary_matrix,
    chain_basis,
    chain_dim,
    normalize_wedge,
    young_shapes,
)
from hamtorus.linalg import SparseRationalMatrix, rank_exact
from hamtorus.verify import compose_is_zero

K = BasisKind
PI2 = PoissonStructure.symplectic(2)
PI4 = PoissonStructure.symplectic(4)

T2_DIMS = {
    2: [8, 6],
    3: [12, 32, 4],
    4: [16, 76, 48, 1],
    5: [20, 160, 184, 32],
    6: [24, 274, 536, 216, 8],
}


def brute_force_shapes(area, length, caps):
    """Independent shape search over a bounded box."""
    if area < length:
        return set()
    found = set()
    widths = range(1, area + 1)
    for combo in itertools.combinations_with_replacement(widths, length):
        if sum(combo) != area:
            continue
        k = [0] * max(combo)
        for width in combo:
            k[width - 1] += 1
        if caps and any(k[j] > caps(j + 1) for j in range(len(k)) if caps(j + 1) is not None):
            continue
        found.add(tuple(k))
    return found


def test_young_shapes_examples():
    got = young_shapes(4, 2)
    assert [s.k for s in got] == [(0, 2), (1, 0, 1)]
    got = young_shapes(2, 2, lambda j: 4)
    assert [s.k for s in got] == [(2,)]
    assert young_shapes(1, 2) == []


@pytest.mark.parametrize("area,length", [(5, 2), (6, 3), (8, 4), (7, 7)])
def test_young_shapes_against_brute_force(area, length):
    caps = lambda j: 3
    got = {s.k for s in young_shapes(area, length, caps)}
    assert got == brute_force_shapes(area, length, caps)
    unbounded = {s.k for s in young_shapes(area, length)}
    assert unbounded == brute_force_shapes(area, length, None)


def test_young_shape_fields():
    s = YoungShape((1, 0, 2))
    assert s.length == 3 and s.area == 7
    with pytest.raises(ValueError):
        YoungShape((1, 0))


def test_chain_dims_match_reference_grid():
    for w, dims in T2_DIMS.items():
        got = [chain_dim(w, m, 2, K.PRODUCT) for m in range(1, len(dims) + 1)]
        assert got == dims
        got = [chain_dim(w, m, 2, K.FOURIER) for m in range(1, len(dims) + 1)]
        assert got == dims


def test_chain_dim_examples():
    assert chain_dim(4, 3, 2, K.PRODUCT) == 48
    assert chain_dim(2, 2, 4, K.PRODUCT) == 28
    assert chain_dim(6, 6, 2, K.PRODUCT) == 0  # needs 6 rows of width 1, only 4 exist


def test_chain_dim_torus_degree_bounds():
    for w in range(1, 7):
        for m in range(w + 1, w + 4):
            assert chain_dim(w, m, 2, K.PRODUCT) == 0
    assert chain_dim(0, 1, 2, K.PRODUCT) == 0
    assert chain_dim(-1, 2, 2, K.FOURIER) == 0


def test_chain_dim_polynomial_degree_bounds():
    n = 2
    cap = n * (n + 5) // 2
    for w in range(-2, 4):
        for m in range(max(1, w + cap + 1), w + cap + 4):
            assert chain_dim(w, m, n, K.POLYNOMIAL) == 0
    # linear generators alone span the most negative weights
    assert chain_dim(-2, 2, 2, K.POLYNOMIAL) == 1  # x ^ y
    assert chain_dim(-3, 3, 2, K.POLYNOMIAL) == 0


def test_chain_basis_enumeration():
    basis = chain_basis(3, 2, 2, K.PRODUCT, PI2)
    assert basis.dim == chain_dim(3, 2, 2, K.PRODUCT) == 32
    assert len(set(basis.words)) == 32
    for word in basis.words:
        assert list(word) == sorted(word)
    assert all(basis.index[w] == i for i, w in enumerate(basis.words))
    again = chain_basis(3, 2, 2, K.PRODUCT, PI2)
    assert again.words == basis.words


def test_chain_basis_rejects_degree_zero():
    with pytest.raises(ValueError):
        chain_basis(3, 0, 2, K.PRODUCT, PI2)


def test_normalize_wedge():
    assert normalize_wedge((3, 1)) == (-1, (1, 3))
    assert normalize_wedge((1, 3)) == (1, (1, 3))
    assert normalize_wedge((2, 5, 1)) == (1, (1, 2, 5))
    assert normalize_wedge((1, 1)) is None


def test_boundary_rejects_degree_one():
    with pytest.raises(ValueError):
        boundary_matrix(3, 1, 2, K.PRODUCT, PI2)


def test_boundary_w2_t2():
    M = boundary_matrix(2, 2, 2, K.PRODUCT, PI2)
    assert (M.rows, M.cols) == (8, 6)
    assert rank_exact(M) == 4  # kernel 2


def test_boundary_w3_m3_t2():
    M = boundary_matrix(3, 3, 2, K.PRODUCT, PI2)
    assert (M.rows, M.cols) == (32, 4)
    assert rank_exact(M) == 4  # kernel 0


def test_boundary_rebuild_bit_identical():
    one = boundary_matrix(4, 3, 2, K.FOURIER, PI2)
    two = boundary_matrix(4, 3, 2, K.FOURIER, PI2)
    assert one.entries == two.entries
    assert one.to_text() == two.to_text()


@pytest.mark.parametrize("kind", (K.PRODUCT, K.FOURIER))
def test_boundary_composes_to_zero_t2(kind):
    for w in range(2, 7):
        mats = {}
        for m in range(2, w + 1):
            if chain_dim(w, m, 2, kind) == 0:
                break
            mats[m] = boundary_matrix(w, m, 2, kind, PI2)
        for m in mats:
            if m - 1 in mats:
                assert compose_is_zero(mats[m - 1], mats[m]), (kind, w, m)


def test_boundary_composes_to_zero_t4_and_euclidean():
    for w in (2, 3, 4):
        mats = {
            m: boundary_matrix(w, m, 4, K.PRODUCT, PI4)
            for m in range(2, w + 1)
            if chain_dim(w, m, 4, K.PRODUCT)
        }
        for m in mats:
            if m - 1 in mats:
                assert compose_is_zero(mats[m - 1], mats[m])
    for w in range(-1, 4):
        mats = {}
        for m in range(2, 12):
            if chain_dim(w, m, 2, K.POLYNOMIAL) == 0 or chain_dim(w, m - 1, 2, K.POLYNOMIAL) == 0:
                continue
            mats[m] = boundary_matrix(w, m, 2, K.POLYNOMIAL, PI2)
        for m in mats:
            if m - 1 in mats:
                assert compose_is_zero(mats[m - 1], mats[m])


def test_boundary_empty_spaces_give_empty_matrix():
    M = boundary_matrix(1, 2, 2, K.PRODUCT, PI2)
    assert (M.rows, M.cols) == (4, 0)
    assert M.nnz == 0


def test_triplet_text_round_trip():
    M = boundary_matrix(3, 2, 2, K.FOURIER, PI2)
    text = M.to_text()
    lines = text.splitlines()
    rows, cols, nnz = map(int, lines[0].split())
    assert (rows, cols, nnz) == (M.rows, M.cols, M.nnz)
    assert len(lines) == nnz + 1
    assert text.endswith("\n")
    # 1-based indices, sorted by column then row
    parsed = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert all(r >= 1 and c >= 1 for r, c, _, _ in parsed)
    assert parsed == sorted(parsed, key=lambda t: (t[1], t[0]))
    back = SparseRationalMatrix.from_text(text)
    assert back == M


def test_from_text_validates():
    with pytest.raises(ValueError):
        SparseRationalMatrix.from_text("2 2 1\n")
    with pytest.raises(ValueError):
        SparseRationalMatrix.from_text("")
