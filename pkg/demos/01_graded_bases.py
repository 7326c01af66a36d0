"""Tour of the three graded bases and their shared dimension count.

Degree-k trigonometric words on the n-torus come in two flavours: product
words sin^a cos^b (one cosine exponent per slot capped at 1) and Fourier
words sin(c x)/cos(c x) indexed by signed integers.  Both span the same
graded piece, and a slot-wise index map identifies them.
"""

from hamtorus import (
    BasisKind,
    BasisWord,
    dim_graded_piece,
    enumerate_graded_piece,
    multiply_top,
    differentiate,
    psi_map,
)

K = BasisKind

print("dimensions of the degree-k piece on the 2-torus")
print("k      :", *[f"{k:6d}" for k in range(9)])
for kind in (K.PRODUCT, K.FOURIER):
    dims = [dim_graded_piece(2, k, kind) for k in range(9)]
    print(f"{kind.value:7s}:", *[f"{d:6d}" for d in dims])
print()

print("the degree-2 product words on the 2-torus:")
for word in enumerate_graded_piece(2, 2, K.PRODUCT):
    print("   ", word)
print()

print("the slot-wise bijection onto Fourier words (degree 2):")
for word in enumerate_graded_piece(2, 2, K.PRODUCT):
    print(f"    {word!r:18s} -> {psi_map(word)!r}")
print()

print("graded products keep only the top-degree part:")
u = BasisWord.product((1,), (1,))
print(f"    {u!r} * {u!r} = {multiply_top(u, u)}   (cos^2 = 1 - sin^2, lower part dropped)")
s3 = BasisWord.fourier((3,))
c2 = BasisWord.fourier((-2,))
print(f"    {s3!r} * {c2!r} = {multiply_top(s3, c2)}   (product-to-sum, sin 5x survives)")
print()

print("differentiation is degree-preserving on the torus:")
print(f"    d/dx1 {s3!r} = {differentiate(s3, 1)}")
w = BasisWord.product((2, 0), (1, 0))
print(f"    d/dx1 {w!r} = {differentiate(w, 1)}")
