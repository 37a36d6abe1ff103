"""
Word linear complexity
======================

When n divides the LC and the block Hankel matrix has full rank, the
sequence satisfies a matrix recurrence of degree LC / n.
"""

import numpy as np

from wordlc import VectorSequence, compute_wlc
from wordlc.linalg import rank
from wordlc.wlc import block_hankel

v = VectorSequence.from_columns([[1, 0, 0, 0, 1, 0],
                                 [1, 0, 1, 1, 0, 0]], p=2, period=6)
r = compute_wlc(v)
print("LC", r.lc, " WLC", r.wlc, " nontrivial", r.nontrivial)

H = block_hankel(v, r.wlc)
print(H)
print("rank", rank(H, 2))

# M(X) = X^3 I + A2 X^2 + A1 X + A0
for i, a in enumerate(r.coefficient_blocks):
    print(f"A{i} =", a.tolist())

# here LC = 5, so no degree-3 matrix recurrence; its H~(6) is rank 5
w = VectorSequence.from_columns([[1, 0, 0, 0, 1, 0],
                                 [0, 0, 1, 1, 0, 0]], p=2, period=6)
print(compute_wlc(w).diagnostics)
print("rank at d=3:", rank(block_hankel(w, 3), 2))

# over GF(5) the signs matter
A0 = np.array([[1, 2], [0, 3]])
A1 = np.array([[4, 0], [1, 1]])
terms = [np.array([1, 0]), np.array([0, 1])]
for j in range(60):
    terms.append((-(A0 @ terms[j] + A1 @ terms[j + 1])) % 5)
u = VectorSequence(np.array(terms), 5)
ru = compute_wlc(u)
print("GF(5):", ru.lc, ru.wlc, [a.tolist() for a in ru.coefficient_blocks])
