"""Word linear complexity and local inversion from recurrences.

Sign convention used throughout: a monic matrix polynomial
M(X) = X^d I + sum_i A_i X^i encodes the recurrence

    V_{d+j} + sum_{i<d} A_i V_{i+j} = 0      for every shift j,

and a monic scalar polynomial encodes the same with scalars a_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InsufficientData,
    NonUnique,
    NoSolution,
    Singular,
    SingularConstantCoefficient,
    SolveFailure,
    ZeroConstantTerm,
)
from .field import inv_mod
from .linalg import identity, inverse, mat_mul, mat_vec_mul, rank, solve_left
from .matpoly import MatrixPoly, annihilates
from .poly import Poly, hankel_scalar_minpoly
from .sequence import VectorSequence


@dataclass(frozen=True)
class WlcReport:
    lc: int
    n: int
    scalar_minpoly: Poly
    divisible: bool
    matrix_minpoly: MatrixPoly
    nontrivial: bool
    wlc: int | None = None
    block_rank: int | None = None
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def coefficient_blocks(self) -> list[np.ndarray]:
        """[A_0, ..., A_{d-1}] of the nontrivial M(X); empty otherwise."""
        if not self.nontrivial:
            return []
        return list(self.matrix_minpoly.coeffs[:-1])


def block_hankel(v: VectorSequence, d: int) -> np.ndarray:
    """(n d) x (n d) matrix whose column j stacks V_j, ..., V_{j+d-1}."""
    n = v.n
    cols = n * d
    if d <= 0:
        return np.zeros((0, 0), dtype=np.int64)
    t = v.window(cols + d - 1)
    idx = np.arange(d)[:, None] + np.arange(cols)[None, :]
    # t[idx] has shape (d, cols, n): block row i, column j -> V_{i+j}
    return t[idx].transpose(0, 2, 1).reshape(d * n, cols).copy()


def _state_matrix(t: np.ndarray, d: int, count: int) -> np.ndarray:
    idx = np.arange(d)[:, None] + np.arange(count)[None, :]
    return t[idx].transpose(0, 2, 1).reshape(d * t.shape[1], count)


def compute_wlc(v: VectorSequence) -> WlcReport:
    """LC, scalar minimal polynomial and (when it exists) the matrix one.

    Only d = LC / n is tried: a unique matrix recurrence of degree d forces
    n d = LC, so no other degree can succeed.
    """
    p, n = v.p, v.n
    m = hankel_scalar_minpoly(v)
    lc = len(m.coeffs) - 1
    fallback = MatrixPoly.from_scalar(m, n)
    divisible = lc % n == 0
    base = dict(lc=lc, n=n, scalar_minpoly=m, divisible=divisible, matrix_minpoly=fallback)
    if lc == 0:
        return WlcReport(**base, nontrivial=False, diagnostics=("all-zero sequence",))
    if not divisible:
        return WlcReport(
            **base,
            nontrivial=False,
            diagnostics=(f"n={n} does not divide LC={lc}",),
        )
    d = lc // n
    dn = d * n
    if not v.available(d + dn):
        raise InsufficientData(f"need {d + dn} terms for the degree-{d} block system")
    Ht = block_hankel(v, d)
    br = rank(Ht, p)
    if br < dn:
        return WlcReport(
            **base,
            nontrivial=False,
            block_rank=br,
            diagnostics=(f"block Hankel rank {br} < {dn}",),
        )
    t = v.window(d + dn)
    rhs = (-t[d : d + dn].T) % p  # n x dn: columns V_d .. V_{d+dn-1}
    try:
        blocks = solve_left(Ht, rhs, p)
    except (NoSolution, NonUnique) as exc:
        raise SolveFailure(f"full-rank block system not uniquely solvable: {exc}") from exc
    A = [blocks[:, i * n : (i + 1) * n] for i in range(d)]
    M = MatrixPoly.monic_from_blocks(A, p)

    notes = []
    if v.period is not None:
        if rank(block_hankel(v, d + 1), p) != dn:
            notes.append("rank of the next block Hankel did not stay at d n")
        ok = annihilates(M, v, count=v.period + d)
    else:
        ok = annihilates(M, v)
    if not ok:
        return WlcReport(
            **base,
            nontrivial=False,
            block_rank=br,
            diagnostics=tuple(notes) + ("solved recurrence fails on later terms",),
        )
    if rank(A[0], p) < n:
        notes.append("constant coefficient A_0 is singular")
    return WlcReport(
        lc=lc,
        n=n,
        scalar_minpoly=m,
        divisible=True,
        matrix_minpoly=M,
        nontrivial=True,
        wlc=d,
        block_rank=br,
        diagnostics=tuple(notes),
    )


def _monic(M: MatrixPoly) -> MatrixPoly:
    if M.is_monic():
        return M
    lead_inv = inverse(M.lead, M.p)
    return MatrixPoly([mat_mul(lead_inv, c, M.p) for c in M.coeffs], M.p, M.n)


def local_inverse_from_matrix_minpoly(v: VectorSequence, M: MatrixPoly) -> np.ndarray:
    """Prefix V_{-1} from the matrix recurrence taken at shift j = -1."""
    p = v.p
    M = _monic(M)
    d = len(M.coeffs) - 1
    if d < 1:
        raise ValueError("matrix polynomial must have degree >= 1")
    t = v.window(d)
    try:
        a0_inv = inverse(M.coeffs[0], p)
    except Singular:
        raise SingularConstantCoefficient("A_0 is singular") from None
    acc = t[d - 1].copy()
    for i in range(1, d):
        acc = (acc + mat_vec_mul(M.coeffs[i], t[i - 1], p)) % p
    return (-mat_vec_mul(a0_inv, acc, p)) % p


def local_inverse_from_scalar_minpoly(v: VectorSequence, m: Poly) -> np.ndarray:
    """Prefix V_{-1} from the scalar recurrence taken at shift j = -1."""
    p = v.p
    m = m.monic()
    k = len(m.coeffs) - 1
    if k < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    if m[0] == 0:
        raise ZeroConstantTerm("a_0 = 0: the sequence is not purely periodic")
    t = v.window(k)
    acc = t[k - 1].copy()
    for i in range(1, k):
        if m[i]:
            acc = (acc + m[i] * t[i - 1]) % p
    return (-inv_mod(m[0], p) * acc) % p


def companion_map_matrix(M: MatrixPoly) -> np.ndarray:
    """State-transition matrix of the recurrence on stacked states (V_j; ...; V_{j+d-1})."""
    M = _monic(M)
    n, p = M.n, M.p
    d = len(M.coeffs) - 1
    T = np.zeros((n * d, n * d), dtype=np.int64)
    for i in range(d - 1):
        T[i * n : (i + 1) * n, (i + 1) * n : (i + 2) * n] = identity(n)
    for i in range(d):
        T[(d - 1) * n :, i * n : (i + 1) * n] = (-M.coeffs[i]) % p
    return T
