"""Dense exact linear algebra over GF(p).

Matrices are 2-D numpy integer arrays with entries in [0, p).  Every
function returns a fresh array and never modifies its arguments.

Elimination picks the first nonzero entry at or below the current row as
pivot, so results are deterministic.  Over GF(2) rows are packed into Python
integers and eliminated with XOR; that path returns exactly what the
generic path would (``packed=False`` forces the generic path).
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NonUnique, NoSolution, Singular
from .field import inv_mod

_INT64_LIMIT = 2**63 - 1


def as_matrix(a, p: int) -> np.ndarray:
    """Canonical int64 copy of ``a`` reduced mod p (1-D input becomes a column)."""
    m = np.array(a, dtype=np.int64) % p
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got shape {m.shape}")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    k = a.shape[1]
    if k * (p - 1) ** 2 <= _INT64_LIMIT:
        return (a @ b) % p
    # accumulated products would overflow int64
    return ((a.astype(object) @ b.astype(object)) % p).astype(np.int64)


def mat_vec_mul(a: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    if v.ndim == 1:
        return mat_mul(a, v.reshape(-1, 1), p).reshape(-1)
    if v.shape[1] != 1:
        raise DimensionMismatch(f"expected a column vector, got shape {v.shape}")
    return mat_mul(a, v, p)


# -- elimination ----------------------------------------------------------


def _rref_generic(a: np.ndarray, p: int, ncols: int, reduced: bool = True):
    m = a.copy()
    rows = m.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        # columns left of c are already clear outside pivot positions
        prow = (m[r, c:] * inv_mod(int(m[r, c]), p)) % p
        m[r, c:] = prow
        lo = 0 if reduced else r + 1
        col = m[lo:, c].copy()
        if reduced:
            col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            sel = hit + lo
            m[sel, c:] = (m[sel, c:] - np.outer(col[hit], prow)) % p
        pivots.append(c)
        r += 1
    return m, pivots


def _pack_rows(a: np.ndarray) -> list[int]:
    if a.shape[1] == 0:
        return [0] * a.shape[0]
    packed = np.packbits(a.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _unpack_rows(rows: list[int], ncols: int) -> np.ndarray:
    out = np.zeros((len(rows), ncols), dtype=np.int64)
    nbytes = (ncols + 7) // 8
    for i, r in enumerate(rows):
        if r:
            bits = np.unpackbits(
                np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8),
                bitorder="little",
            )
            out[i] = bits[:ncols]
    return out


def _rref_gf2(a: np.ndarray, ncols: int):
    rows = _pack_rows(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        bit = 1 << c
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= pr
        pivots.append(c)
        r += 1
    return _unpack_rows(rows, a.shape[1]), pivots


def rref(a, p: int, ncols: int | None = None, packed: bool = True):
    """Reduced row echelon form of ``a`` and its pivot columns.

    Only the first ``ncols`` columns are used as pivot candidates (all of
    them by default); the remaining columns are carried along, which is how
    augmented systems are reduced.
    """
    m = as_matrix(a, p)
    if ncols is None:
        ncols = m.shape[1]
    if p == 2 and packed:
        return _rref_gf2(m, ncols)
    return _rref_generic(m, p, ncols)


def rank(a, p: int, packed: bool = True) -> int:
    m = as_matrix(a, p)
    if m.shape[0] > m.shape[1]:
        m = m.T
    if p == 2 and packed:
        # rank only: greedy XOR basis keyed by lowest set bit
        basis: dict[int, int] = {}
        for row in _pack_rows(m):
            while row:
                low = row & -row
                if low in basis:
                    row ^= basis[low]
                else:
                    basis[low] = row
                    break
        return len(basis)
    return len(_rref_generic(m, p, m.shape[1], reduced=False)[1])


def solve_right(a, b, p: int, packed: bool = True) -> np.ndarray:
    """Unique x with a @ x == b (mod p), solved column by column of b."""
    a = as_matrix(a, p)
    b = as_matrix(b, p)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"a has {a.shape[0]} rows, b has {b.shape[0]}")
    nvars = a.shape[1]
    red, pivots = rref(np.hstack([a, b]), p, ncols=nvars, packed=packed)
    r = len(pivots)
    if np.any(red[r:, nvars:]):
        raise NoSolution("inconsistent linear system")
    if r < nvars:
        raise NonUnique(f"rank {r} < {nvars} unknowns")
    return red[:nvars, nvars:].copy()


def solve_left(a, b, p: int, packed: bool = True) -> np.ndarray:
    """Unique X with X @ a == b (mod p)."""
    a = as_matrix(a, p)
    b = as_matrix(b, p)
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatch(f"a has {a.shape[1]} columns, b has {b.shape[1]}")
    return solve_right(a.T, b.T, p, packed=packed).T.copy()


def inverse(m, p: int, packed: bool = True) -> np.ndarray:
    m = as_matrix(m, p)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"non-square matrix {m.shape}")
    try:
        return solve_right(m, identity(m.shape[0]), p, packed=packed)
    except (NonUnique, NoSolution):
        raise Singular("matrix is singular") from None


def is_nonsingular(m, p: int) -> bool:
    m = as_matrix(m, p)
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]
