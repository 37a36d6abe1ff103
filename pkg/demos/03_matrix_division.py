"""
Euclidean division of matrix polynomials
========================================
"""

import numpy as np

from wordlc import MatrixPoly, Side, euclid_divide, matpoly_det, matpoly_mul
from wordlc.poly import x_pow_minus_one

M = MatrixPoly.monic_from_blocks([[[0, 1], [1, 1]],
                                  [[0, 0], [0, 1]],
                                  [[1, 1], [0, 1]]], p=2)
P = MatrixPoly.from_scalar(x_pow_minus_one(6, 2), 2)   # (X^6 + 1) I

Q, R = euclid_divide(P, M, Side.RIGHT)
print("Q:", [c.tolist() for c in Q.coeffs])
print("R is zero:", R.is_zero())
print("det M =", matpoly_det(M))

# coefficients do not commute, so left and right quotients can differ
rng = np.random.default_rng(3)
D = MatrixPoly([rng.integers(0, 3, (2, 2)), [[1, 1], [0, 1]]], p=3)
A = MatrixPoly([rng.integers(0, 3, (2, 2)) for _ in range(3)], p=3)
QL, RL = euclid_divide(A, D, Side.LEFT)
QR, RR = euclid_divide(A, D, Side.RIGHT)
print("left == right quotient:", QL == QR)
print(matpoly_mul(D, QL) + RL == A, matpoly_mul(QR, D) + RR == A)
