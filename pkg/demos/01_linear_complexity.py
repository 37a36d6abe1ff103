"""
Linear complexity of a vector sequence
======================================

Scalar minimal polynomial of a periodic sequence in GF(2)^3, found two ways.
"""

import numpy as np

from wordlc import VectorSequence, berlekamp_massey, hankel_scalar_minpoly
from wordlc.linalg import rank
from wordlc.poly import hankel

# three component sequences of period 7, one per row
rows = [[1, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1]]
v = VectorSequence.from_columns(rows, p=2, period=7)
print(v.terms.T)

# rank of the stacked Hankel matrix grows until it hits the LC
print([rank(hankel(v, k), 2) for k in range(1, 9)])

m = hankel_scalar_minpoly(v)
print("m(X) =", m, " LC =", m.deg)

# per component, then lcm
for r in rows:
    print(r, "->", berlekamp_massey(r * 2, 2))
