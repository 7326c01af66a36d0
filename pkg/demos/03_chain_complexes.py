"""From Young shapes to boundary matrices.

A weight-w, degree-m chain space decomposes over Young shapes: k_j wedge
factors drawn from the degree-j generators, with sum k_j = m and
sum j*k_j = w.  This script walks one small space end to end and checks
that consecutive boundary operators compose to zero.
"""

from hamtorus import (
    BasisKind,
    PoissonStructure,
    boundary_matrix,
    chain_basis,
    chain_dim,
    dim_graded_piece,
    rank,
    young_shapes,
)
from hamtorus.verify import compose_is_zero

K = BasisKind
pi2 = PoissonStructure.symplectic(2)

print("Young shapes of area 6 and length 3 (capped by generator counts):")
caps = lambda j: dim_graded_piece(2, j, K.PRODUCT)
for shape in young_shapes(6, 3, caps):
    parts = [f"{kj} rows of width {j}" for j, kj in enumerate(shape.k, start=1) if kj]
    print(f"    {list(shape.k)}  ({', '.join(parts)})")
print()

print("chain dimensions on the 2-torus (rows = weight, columns = degree):")
for w in range(2, 7):
    dims = [chain_dim(w, m, 2, K.PRODUCT) for m in range(1, 7)]
    print(f"    w={w}: {dims}")
print()

basis = chain_basis(3, 2, 2, K.PRODUCT, pi2)
print(f"weight 3, degree 2 has {basis.dim} wedge words; the first five:")
for word in basis.words[:5]:
    print("   ", word)
print()

print("boundary matrices and ranks at weight 4:")
mats = {m: boundary_matrix(4, m, 2, K.PRODUCT, pi2) for m in (2, 3, 4)}
for m, M in mats.items():
    r, cert = rank(M)
    print(
        f"    d_{m}: {M.rows} x {M.cols}, {M.nnz} entries, rank {r} "
        f"({cert.method}, kernel {M.cols - r})"
    )
print()
print("d o d = 0:", all(compose_is_zero(mats[m - 1], mats[m]) for m in (3, 4)))
print()

print("the triplet text format (first lines of d_2 at weight 2):")
for line in boundary_matrix(2, 2, 2, K.PRODUCT, pi2).to_text().splitlines()[:5]:
    print("   ", line)
