"""Self-contained verification suites behind the ``verify`` CLI command.

Each suite returns a list of ``Check`` records; a check passes when its
``actual`` equals its ``expected``.  The suites exercise the invariants
the library is built on: reference (dim, ker, Betti) grids, corank
formulas, bracket algebra laws, the closed-form bracket oracles, boundary
composition, and the dimension/bijection statements for the two torus
bases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .basis import (
    BasisKind,
    BasisWord,
    LinearCombination,
    dim_graded_piece,
    enumerate_graded_piece,
    graded_index,
    multiply_top,
    psi_map,
)
from .bracket import (
    PoissonStructure,
    bracket_t2_fourier_oracle,
    bracket_t2_product_oracle,
    bracket_top,
    cokernel_witnesses_t2,
)
from .chains import _degree_offsets, boundary_matrix, chain_basis, chain_dim
from .homology import (
    alternating_identity_check,
    betti_table,
    corank_closed,
    corank_computed,
    corank_poisson_product,
    corank_recursive,
)
from .linalg import SparseRationalMatrix, rank_exact
from .tables import T2_TABLES, T3_DEGENERATE_CORANKS, T4_TABLES

SUITES = (
    "t2-tables",
    "t4-tables",
    "formulas",
    "brackets",
    "ddzero",
    "bases",
    "poisson-degenerate",
)


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _table_checks(tables, n, weights, policy, seed, cache_store) -> list[Check]:
    pi = PoissonStructure.symplectic(n)
    out = []
    for w in weights:
        rows = tables[w]
        bt = betti_table(
            w, n, BasisKind.PRODUCT, pi, len(rows["dim"]),
            policy=policy, seed=seed, cache_store=cache_store,
        )
        for what in ("dim", "ker", "betti"):
            out.append(Check(f"t{n} w={w} {what} row", rows[what], bt.row(what)))
    return out


def suite_t2_tables(policy="fast", seed=0, cache_store=None, weights=range(2, 7)):
    return _table_checks(T2_TABLES, 2, weights, policy, seed, cache_store)


def suite_t4_tables(policy="fast", seed=0, cache_store=None, weights=range(2, 5)):
    return _table_checks(T4_TABLES, 4, weights, policy, seed, cache_store)


def suite_formulas(**_ignored) -> list[Check]:
    out = [
        Check("crk(w,4) linear in w, w<=100", True,
              all(corank_recursive(w, 4) == 16 * w - 8 for w in range(1, 101))),
        Check("crk(w,6) quadratic in w, w<=100", True,
              all(corank_recursive(w, 6) == 4 * (8 * w * w - 12 * w + 7)
                  for w in range(1, 101))),
        Check("recursive matches closed forms, 2n<=6, w<=100", True,
              all(corank_recursive(w, two_n) == corank_closed(w, two_n)
                  for two_n in (2, 4, 6) for w in range(1, 101))),
        Check("alternating corank identity, n<=5, w<=50", True,
              all(alternating_identity_check(w, n)
                  for n in range(1, 6) for w in range(n + 1, 51))),
        Check("crk(0,2n) base", [1, 1, 1, 1],
              [corank_recursive(0, two_n) for two_n in (2, 4, 6, 8)]),
    ]
    return out


def _random_word(n, kind, rng, max_degree=5):
    d = rng.randrange(1, max_degree + 1)
    words = enumerate_graded_piece(n, d, kind)
    return words[rng.randrange(len(words))]


def _witness_identity_checks(limit=6) -> list[Check]:
    """The five exact bracket identities that realize every non-witness
    generator of the 2-torus as a boundary image."""
    pi = PoissonStructure.symplectic(2)
    W = BasisWord.product

    def bk(u, v):
        return bracket_top(u, v, pi)

    rng4 = range(limit + 1)
    ok_11 = all(
        LinearCombination.of(W((c1, c2), (1, 1)))
        == bk(W((1 + c1, 0), (0, 0)), W((0, 1 + c2), (0, 0))).scaled(
            Fraction(1, (1 + c1) * (1 + c2)))
        for c1 in rng4 for c2 in rng4
    )

    def hat(P, Q):
        return (P[0], Q[1]), (Q[0], P[1])

    def tilde(P, Q):
        return (Q[0], P[1]), (P[0], Q[1])

    ok_10 = ok_01 = ok_00a = ok_00b = True
    for a1, a2, b1, b2 in itertools.product(rng4, repeat=4):
        for p2, q2 in ((0, 1), (1, 0)):
            P, Q = (0, p2), (0, q2)
            Ph, Qh = hat(P, Q)
            diff = bk(W((1 + a1, a2), P), W((b1, b2), Q)) - bk(
                W((1 + a1, a2), Ph), W((b1, b2), Qh))
            ok_10 &= LinearCombination.of(
                W((a1 + b1, 1 + a2 + b2), (1, 0)), p2 - q2
            ) == diff.scaled(Fraction(1, 1 + a1 + b1))
        for p1, q1 in ((0, 1), (1, 0)):
            for p2, q2 in ((0, 1), (1, 0)):
                P, Q = (p1, p2), (q1, q2)
                Ph, Qh = hat(P, Q)
                diff = bk(W((a1, a2), P), W((b1, b2), Q)) - bk(
                    W((a1, a2), Ph), W((b1, b2), Qh))
                ok_00a &= LinearCombination.of(
                    W((1 + a1 + b1, 1 + a2 + b2), (0, 0)), p2 - q2
                ) == diff.scaled(Fraction(-1, 1 + a1 + b1))
        for p1, q1 in ((0, 1), (1, 0)):
            P, Q = (p1, 0), (q1, 0)
            Pt, Qt = tilde(P, Q)
            diff = bk(W((a1, 1 + a2), P), W((b1, b2), Q)) - bk(
                W((a1, 1 + a2), Pt), W((b1, b2), Qt))
            ok_01 &= LinearCombination.of(
                W((1 + a1 + b1, a2 + b2), (0, 1)), p1 - q1
            ) == diff.scaled(Fraction(-1, 1 + a2 + b2))
        for p1, q1 in ((0, 1), (1, 0)):
            for p2, q2 in ((0, 1), (1, 0)):
                P, Q = (p1, p2), (q1, q2)
                Pt, Qt = tilde(P, Q)
                diff = bk(W((a1, a2), P), W((b1, b2), Q)) - bk(
                    W((a1, a2), Pt), W((b1, b2), Qt))
                ok_00b &= LinearCombination.of(
                    W((1 + a1 + b1, 1 + a2 + b2), (0, 0)), p1 - q1
                ) == diff.scaled(Fraction(1, 1 + a2 + b2))
    return [
        Check("surjectivity identity onto cos*cos words", True, ok_11),
        Check("surjectivity identity onto cos-first words", True, ok_10),
        Check("surjectivity identity onto cos-second words", True, ok_01),
        Check("surjectivity identity onto sin-only words (via first slot)", True, ok_00a),
        Check("surjectivity identity onto sin-only words (via second slot)", True, ok_00b),
    ]


def witness_augmented_rank(w: int, kind: BasisKind) -> bool:
    """rank([boundary | witness columns]) == rank(boundary) + 4."""
    pi = PoissonStructure.symplectic(2)
    target = chain_basis(w, 1, 2, kind, pi)
    if chain_dim(w, 2, 2, kind):
        M = boundary_matrix(w, 2, 2, kind, pi, target=target)
    else:
        M = SparseRationalMatrix.from_dict(target.dim, 0, {})
    offs = _degree_offsets(2, kind, w)
    idx = graded_index(2, w, kind)
    extra = {}
    for j, word in enumerate(cokernel_witnesses_t2(w, kind)):
        extra[(target.index[(offs[w] + idx[word],)], j)] = Fraction(1)
    return rank_exact(M.augment_columns(extra)) == rank_exact(M) + 4


def suite_brackets(seed=0, rounds=200, witness_limit=6, **_ignored) -> list[Check]:
    rng = random.Random(seed)
    out: list[Check] = []

    anti = jacobi = weights_add = 0
    for kind in (BasisKind.PRODUCT, BasisKind.FOURIER, BasisKind.POLYNOMIAL):
        for n in (2, 4):
            pi = PoissonStructure.symplectic(n)
            for _ in range(rounds):
                F, G = _random_word(n, kind, rng), _random_word(n, kind, rng)
                fg = bracket_top(F, G, pi)
                if fg:
                    result_weight = fg.degree - (0 if kind.on_torus else 2)
                    weights_add += result_weight != F.weight + G.weight
                anti += fg != -bracket_top(G, F, pi)
            for _ in range(rounds):
                F, G, H = (_random_word(n, kind, rng) for _ in range(3))
                total = (
                    bracket_top(bracket_top(F, G, pi), H, pi)
                    + bracket_top(bracket_top(G, H, pi), F, pi)
                    + bracket_top(bracket_top(H, F, pi), G, pi)
                )
                jacobi += bool(total)
    out.append(Check("antisymmetry failures", 0, anti))
    out.append(Check("jacobi failures", 0, jacobi))
    out.append(Check("weight additivity failures", 0, weights_add))

    pi2 = PoissonStructure.symplectic(2)
    mismatches = 0
    tried = 0
    while tried < 100:
        A = (rng.randrange(0, 5), rng.randrange(0, 5))
        B = (rng.randrange(0, 5), rng.randrange(0, 5))
        if A[0] + B[0] < 1 or A[1] + B[1] < 1:
            continue
        P = (rng.randrange(0, 2), rng.randrange(0, 2))
        Q = (rng.randrange(0, 2), rng.randrange(0, 2))
        tried += 1
        ref = bracket_top(BasisWord.product(A, P), BasisWord.product(B, Q), pi2)
        mismatches += bracket_t2_product_oracle(A, P, B, Q) != ref
    out.append(Check("product-word bracket oracle mismatches (100 random)", 0, mismatches))

    mismatches = 0
    for _ in range(2 * rounds):
        a = (rng.randrange(-4, 5), rng.randrange(-4, 5))
        b = (rng.randrange(-4, 5), rng.randrange(-4, 5))
        ref = bracket_top(BasisWord.fourier(a), BasisWord.fourier(b), pi2)
        mismatches += bracket_t2_fourier_oracle(a, b) != ref
    out.append(Check("fourier bracket oracle mismatches (400 random)", 0, mismatches))

    out.extend(_witness_identity_checks(witness_limit))
    out.append(Check(
        "witness augmented-rank, both bases, w<=6", True,
        all(witness_augmented_rank(w, kind)
            for kind in (BasisKind.PRODUCT, BasisKind.FOURIER)
            for w in range(1, 7)),
    ))

    pi4 = PoissonStructure.symplectic(4)
    leibniz_fail = 0
    for _ in range(rounds):
        u, v = (
            BasisWord.product(
                tuple(rng.randrange(0, 3) for _ in range(4)),
                tuple(rng.randrange(0, 2) for _ in range(4)),
            )
            for _ in range(2)
        )
        leibniz_fail += bracket_top(u, v, pi4) != _split_bracket(u, v, pi4)
    out.append(Check("pairwise split of the 4-torus bracket (200 random)", 0, leibniz_fail))
    return out


def _half_word(word: BasisWord, keep_first: bool) -> BasisWord:
    """Zero out one symplectic pair of a 4-torus product word."""
    a, b = list(word.sin_exponents), list(word.cos_exponents)
    sl = slice(2, 4) if keep_first else slice(0, 2)
    a[sl] = [0, 0]
    b[sl] = [0, 0]
    return BasisWord.product(a, b)


def _split_bracket(u: BasisWord, v: BasisWord, pi4: PoissonStructure) -> LinearCombination:
    """{u,v} recombined from the two symplectic pairs by the product rule."""

    def mul(F: LinearCombination, G: LinearCombination) -> LinearCombination:
        acc = LinearCombination.zero()
        for wu, cu in F.items():
            for wv, cv in G.items():
                acc = acc + multiply_top(wu, wv).scaled(cu * cv)
        return acc

    u1, u2 = _half_word(u, True), _half_word(u, False)
    v1, v2 = _half_word(v, True), _half_word(v, False)
    first = mul(bracket_top(u1, v1, pi4), mul(
        LinearCombination.of(u2), LinearCombination.of(v2)))
    second = mul(mul(LinearCombination.of(u1), LinearCombination.of(v1)),
                 bracket_top(u2, v2, pi4))
    return first + second


def compose_is_zero(A: SparseRationalMatrix, B: SparseRationalMatrix) -> bool:
    """Exact check that A @ B == 0 for consecutive boundary matrices."""
    if A.cols != B.rows:
        raise ValueError("shape mismatch")
    cols_a: dict[int, list] = {}
    for r, c, v in A.entries:
        cols_a.setdefault(c, []).append((r, v))
    cols_b: dict[int, list] = {}
    for r, c, v in B.entries:
        cols_b.setdefault(c, []).append((r, v))
    for col in cols_b.values():
        acc: dict[int, Fraction] = {}
        for i, v in col:
            for r, u in cols_a.get(i, ()):
                acc[r] = acc.get(r, 0) + u * v
        if any(acc.values()):
            return False
    return True


def ddzero_for_model(w_range, n, kind, pi) -> bool:
    for w in w_range:
        mats = {}
        for m in range(2, max(w_range) + 3):
            if chain_dim(w, m, n, kind, pi) == 0:
                break
            mats[m] = boundary_matrix(w, m, n, kind, pi)
        for m in sorted(mats):
            if m - 1 in mats and not compose_is_zero(mats[m - 1], mats[m]):
                return False
    return True


def suite_ddzero(**_ignored) -> list[Check]:
    pi2, pi4 = PoissonStructure.symplectic(2), PoissonStructure.symplectic(4)
    return [
        Check("d o d == 0 on the 2-torus, w<=6 (both bases)", True,
              ddzero_for_model(range(2, 7), 2, BasisKind.PRODUCT, pi2)
              and ddzero_for_model(range(2, 7), 2, BasisKind.FOURIER, pi2)),
        Check("d o d == 0 on the 4-torus, w<=4", True,
              ddzero_for_model(range(2, 5), 4, BasisKind.PRODUCT, pi4)),
        Check("d o d == 0 on euclidean R^2, w<=4", True,
              ddzero_for_model(range(-1, 5), 2, BasisKind.POLYNOMIAL, pi2)),
    ]


def suite_bases(n_max=6, k_max=12, psi_n_max=4, psi_k_max=8, **_ignored) -> list[Check]:
    dims_ok = True
    for n in range(1, n_max + 1):
        for k in range(k_max + 1):
            dp = dim_graded_piece(n, k, BasisKind.PRODUCT)
            df = dim_graded_piece(n, k, BasisKind.FOURIER)
            dims_ok &= dp == df
            dims_ok &= dp == len(enumerate_graded_piece(n, k, BasisKind.PRODUCT))
            dims_ok &= df == len(enumerate_graded_piece(n, k, BasisKind.FOURIER))
    psi_ok = True
    for n in range(1, psi_n_max + 1):
        for k in range(psi_k_max + 1):
            image = {psi_map(w) for w in enumerate_graded_piece(n, k, BasisKind.PRODUCT)}
            psi_ok &= image == set(enumerate_graded_piece(n, k, BasisKind.FOURIER))
    return [
        Check(f"product/fourier dimensions agree, n<={n_max}, k<={k_max}", True, dims_ok),
        Check(f"index bijection between the bases, n<={psi_n_max}, k<={psi_k_max}", True, psi_ok),
    ]


def suite_poisson_degenerate(policy="fast", seed=0, cache_store=None, **_ignored) -> list[Check]:
    pi = PoissonStructure.degenerate(3, 1)
    out = []
    for w in range(1, 5):
        formula = corank_poisson_product(w, 3, 1)
        out.append(Check(f"t3 degenerate formula w={w}", T3_DEGENERATE_CORANKS[w], formula))
        computed = corank_computed(
            w, 3, BasisKind.PRODUCT, pi, policy=policy, seed=seed, cache_store=cache_store
        )
        out.append(Check(f"t3 degenerate matrix w={w}", formula, computed))
    out.append(Check("t3 degenerate linear form 8w-2, w<=20", True,
                     all(corank_poisson_product(w, 3, 1) == 8 * w - 2
                         for w in range(1, 21))))
    return out


def run_suite(name: str, policy="fast", seed=0, cache_store=None) -> list[Check]:
    fns = {
        "t2-tables": suite_t2_tables,
        "t4-tables": suite_t4_tables,
        "formulas": suite_formulas,
        "brackets": suite_brackets,
        "ddzero": suite_ddzero,
        "bases": suite_bases,
        "poisson-degenerate": suite_poisson_degenerate,
    }
    if name not in fns:
        raise ValueError(f"unknown suite {name!r}")
    return fns[name](policy=policy, seed=seed, cache_store=cache_store)
