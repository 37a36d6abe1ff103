"""n x n matrix polynomials over GF(p).

``MatrixPoly`` holds coefficient matrices in ascending degree.  The
indeterminate commutes with the coefficients but the coefficients do not
commute with each other, so products and divisions come in left and right
flavours.
"""

from __future__ import annotations

import enum
import functools
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InsufficientData, Singular, SingularLeadingCoefficient
from .field import check_modulus
from .linalg import as_matrix, identity, inverse, mat_mul
from .poly import NEG_INF, Poly
from .sequence import VectorSequence


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class MatrixPoly:
    __slots__ = ("p", "n", "coeffs")

    def __init__(self, coeffs: Sequence, p: int, n: int | None = None):
        p = check_modulus(p)
        mats = [as_matrix(c, p) for c in coeffs]
        if n is None:
            if not mats:
                raise ValueError("n is required for the zero polynomial")
            n = mats[0].shape[0]
        for c in mats:
            if c.shape != (n, n):
                raise DimensionMismatch(f"coefficient of shape {c.shape}, expected ({n}, {n})")
        while mats and not mats[-1].any():
            mats.pop()
        for c in mats:
            c.setflags(write=False)
        self.p = p
        self.n = n
        self.coeffs = tuple(mats)

    @classmethod
    def zero(cls, n: int, p: int) -> MatrixPoly:
        return cls([], p, n)

    @classmethod
    def identity(cls, n: int, p: int) -> MatrixPoly:
        return cls([identity(n)], p, n)

    @classmethod
    def from_scalar(cls, f: Poly, n: int) -> MatrixPoly:
        """f(X) * I."""
        return cls([a * identity(n) for a in f.coeffs], f.p, n)

    @classmethod
    def monic_from_blocks(cls, blocks: Sequence, p: int) -> MatrixPoly:
        """X^d I + sum_i blocks[i] X^i."""
        blocks = [as_matrix(b, p) for b in blocks]
        n = blocks[0].shape[0]
        return cls(blocks + [identity(n)], p, n)

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> np.ndarray:
        if not self.coeffs:
            return np.zeros((self.n, self.n), dtype=np.int64)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> np.ndarray:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return np.zeros((self.n, self.n), dtype=np.int64)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and np.array_equal(self.lead, identity(self.n))

    def _check(self, other: MatrixPoly) -> None:
        if self.p != other.p or self.n != other.n:
            raise DimensionMismatch(
                f"GF({self.p}) {self.n}x{self.n} vs GF({other.p}) {other.n}x{other.n}"
            )

    def __add__(self, other: MatrixPoly) -> MatrixPoly:
        self._check(other)
        k = max(len(self.coeffs), len(other.coeffs))
        return MatrixPoly([self.coeff(i) + other.coeff(i) for i in range(k)], self.p, self.n)

    def __neg__(self) -> MatrixPoly:
        return MatrixPoly([-c for c in self.coeffs], self.p, self.n)

    def __sub__(self, other: MatrixPoly) -> MatrixPoly:
        return self + (-other)

    def __mul__(self, other: MatrixPoly) -> MatrixPoly:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MatrixPoly.zero(self.n, self.p)
        p, n = self.p, self.n
        out = [np.zeros((n, n), dtype=np.int64) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if not a.any():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + mat_mul(a, b, p)) % p
        return MatrixPoly(out, p, n)

    def scale_shift(self, c: int, k: int) -> MatrixPoly:
        """c * X^k * self."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        zero = np.zeros((self.n, self.n), dtype=np.int64)
        return MatrixPoly([zero] * k + [int(c) * a for a in self.coeffs], self.p, self.n)

    def scalar_entry(self, i: int, j: int) -> Poly:
        """Entry (i, j) as a scalar polynomial."""
        return Poly([int(c[i, j]) for c in self.coeffs], self.p)

    def __eq__(self, other):
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        return (
            self.p == other.p
            and self.n == other.n
            and len(self.coeffs) == len(other.coeffs)
            and all(np.array_equal(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.p, self.n, tuple(c.tobytes() for c in self.coeffs)))

    def __repr__(self):
        return f"MatrixPoly(n={self.n}, p={self.p}, deg={self.deg})"


def matpoly_add(a: MatrixPoly, b: MatrixPoly) -> MatrixPoly:
    return a + b


def matpoly_mul(a: MatrixPoly, b: MatrixPoly) -> MatrixPoly:
    return a * b


def matpoly_scale_shift(a: MatrixPoly, c: int, k: int) -> MatrixPoly:
    return a.scale_shift(c, k)


def euclid_divide(P: MatrixPoly, D: MatrixPoly, side: Side | str = Side.RIGHT):
    """Euclidean division by D whose leading coefficient is nonsingular.

    ``Side.LEFT`` gives (Q, R) with P = D Q + R, ``Side.RIGHT`` gives
    P = Q D + R; in both cases deg R < deg D.
    """
    side = Side(side)
    P._check(D)
    if D.is_zero():
        raise SingularLeadingCoefficient("division by the zero polynomial")
    p, n = P.p, P.n
    try:
        lead_inv = inverse(D.lead, p)
    except Singular:
        raise SingularLeadingCoefficient("leading coefficient of divisor is singular") from None
    m = len(D.coeffs) - 1
    rem = [c.copy() for c in P.coeffs]
    nq = max(len(rem) - m, 0)
    quot = [np.zeros((n, n), dtype=np.int64) for _ in range(nq)]
    for k in range(len(rem) - 1 - m, -1, -1):
        top = rem[k + m]
        if not top.any():
            continue
        if side is Side.LEFT:
            q = mat_mul(lead_inv, top, p)
            for i, d in enumerate(D.coeffs):
                rem[k + i] = (rem[k + i] - mat_mul(d, q, p)) % p
        else:
            q = mat_mul(top, lead_inv, p)
            for i, d in enumerate(D.coeffs):
                rem[k + i] = (rem[k + i] - mat_mul(q, d, p)) % p
        quot[k] = q
    return MatrixPoly(quot, p, n), MatrixPoly(rem[:m], p, n)


def matpoly_det(M: MatrixPoly) -> Poly:
    """Determinant over GF(p)[X] by cofactor expansion with memoized minors."""
    n, p = M.n, M.p
    entries = [[M.scalar_entry(i, j) for j in range(n)] for i in range(n)]

    @functools.lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Poly:
        if row == n:
            return Poly.one(p)
        total = Poly.zero(p)
        for pos, c in enumerate(cols):
            e = entries[row][c]
            if e.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = e * sub
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, tuple(range(n)))


def annihilates(pm: MatrixPoly, v: VectorSequence, count: int | None = None) -> bool:
    """Check sum_i P_i V_{i+j} = 0 for every shift j that fits in the data.

    By default the data is the stored terms (one full period plus deg
    terms when the period is known); ``count`` overrides the length.
    """
    if pm.n != v.n or pm.p != v.p:
        raise DimensionMismatch("polynomial and sequence disagree on n or p")
    m = len(pm.coeffs) - 1
    if m < 0:
        return True
    if count is None:
        count = v.period + m if v.period is not None else len(v)
    if count < m + 1:
        raise InsufficientData(f"need at least {m + 1} terms, have {count}")
    t = v.window(count)
    span = count - m
    p = v.p
    acc = np.zeros((v.n, span), dtype=np.int64)
    for i, c in enumerate(pm.coeffs):
        if c.any():
            acc = (acc + mat_mul(c, t[i : i + span].T, p)) % p
    return not acc.any()
