"""Beyond the symplectic torus: degenerate pairings and euclidean space.

A constant Poisson tensor may pair only 2m of the n torus coordinates;
the degree-1 corank then factors through a convolution with the
dimensions of the untouched torus directions.  On euclidean space with
polynomial Hamiltonians the degree-1 homology vanishes in every weight.
"""

from hamtorus import (
    BasisKind,
    PoissonStructure,
    betti_table,
    corank_computed,
    corank_poisson_product,
)

K = BasisKind

print("3-torus, pairing only the first two coordinates:")
pi = PoissonStructure.degenerate(3, 1)
print("    w : convolution formula | boundary matrices")
for w in range(1, 5):
    formula = corank_poisson_product(w, 3, 1)
    computed = corank_computed(w, 3, K.PRODUCT, pi)
    print(f"    {w} : {formula:3d}                 | {computed:3d}")
print("    (the linear pattern is 8w - 2)")
print()

print("fully paired case degenerates to the symplectic corank:")
for w in range(1, 5):
    print(f"    w={w}: {corank_poisson_product(w, 4, 2)} (= 16w - 8)")
print()

print("euclidean R^2 with polynomial Hamiltonians, weights -1..6:")
pi2 = PoissonStructure.symplectic(2)
coranks = [corank_computed(w, 2, K.POLYNOMIAL, pi2) for w in range(-1, 7)]
print("    degree-1 coranks:", coranks)
print()

print("a full euclidean grid at weight 0 (weights live in degree - 2):")
bt = betti_table(0, 2, K.POLYNOMIAL, pi2, 7)
for what in ("dim", "ker", "betti"):
    print(f"    {what:5s} {bt.row(what)}")
print("    degree-1 homology is zero; higher degrees need not be.")
