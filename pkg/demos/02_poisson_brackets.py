"""The reduced Poisson bracket and its closed 2-torus forms.

The bracket of two graded words is assembled from derivatives and graded
products; on the 2-torus it also has closed forms which this script
cross-checks, together with the four classes no bracket can reach.
"""

import random

from hamtorus import (
    BasisKind,
    BasisWord,
    PoissonStructure,
    bracket_t2_fourier_oracle,
    bracket_t2_product_oracle,
    bracket_top,
    cokernel_witnesses_t2,
    enumerate_graded_piece,
)

pi2 = PoissonStructure.symplectic(2)

print("brackets of one-variable sine powers hit every cos*cos word:")
for c1, c2 in ((0, 0), (1, 2)):
    f = BasisWord.product((1 + c1, 0), (0, 0))
    g = BasisWord.product((0, 1 + c2), (0, 0))
    print(f"    {{{f!r}, {g!r}}} = {bracket_top(f, g, pi2)}")
print()

print("the same bracket through the closed determinant form:")
print("   ", bracket_t2_product_oracle((2, 0), (0, 0), (0, 3), (0, 0)))
print()

print("Fourier side: {cos a x1, cos b x2} = ab sin a x1 sin b x2")
for a, b in ((1, 1), (2, 3)):
    got = bracket_top(BasisWord.fourier((-a, 0)), BasisWord.fourier((0, -b)), pi2)
    print(f"    a={a}, b={b}: {got}  (oracle: {bracket_t2_fourier_oracle((-a, 0), (0, -b))})")
print()

rng = random.Random(1)
agree = 0
for _ in range(500):
    a = (rng.randrange(-4, 5), rng.randrange(-4, 5))
    b = (rng.randrange(-4, 5), rng.randrange(-4, 5))
    ref = bracket_top(BasisWord.fourier(a), BasisWord.fourier(b), pi2)
    agree += bracket_t2_fourier_oracle(a, b) == ref
print(f"closed case formulas vs compositional bracket: {agree}/500 agree")
print()

print("antisymmetry and Jacobi, spot-checked on random degree-<=4 words:")
words = enumerate_graded_piece(2, 3, BasisKind.FOURIER)
f, g, h = words[0], words[7], words[4]
jac = (
    bracket_top(bracket_top(f, g, pi2), h, pi2)
    + bracket_top(bracket_top(g, h, pi2), f, pi2)
    + bracket_top(bracket_top(h, f, pi2), g, pi2)
)
print(f"    {{f,g}} + {{g,f}} = {bracket_top(f, g, pi2) + bracket_top(g, f, pi2)}")
print(f"    jacobiator      = {jac}")
print()

print("what brackets can never produce (weight 5, both bases):")
for kind in (BasisKind.PRODUCT, BasisKind.FOURIER):
    print(f"    {kind.value:7s}: {cokernel_witnesses_t2(5, kind)}")
print("these four classes per weight are exactly the degree-1 homology.")
