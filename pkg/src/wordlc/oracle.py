"""Brute-force ground truth for small instances.

Everything here works over one whole period and shares no acceptance
heuristics with the Hankel route; it exists to check that route.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import BoundExceeded, InsufficientData, NonUnique, NoSolution, NotFound, NotOnCycle
from .dynamics import MapSpec, apply_map
from .linalg import rank, solve_left
from .matpoly import MatrixPoly
from .poly import Poly
from .sequence import VectorSequence

MAX_ENUMERATION = 2**20
_CHUNK = 1 << 14


def cycle_walk_inverse(f: MapSpec, y, bound: int) -> np.ndarray:
    """Walk F from y until y comes back and return the point just before it."""
    y = tuple(int(a) % f.p for a in np.asarray(y).reshape(-1))
    seen = {y}
    x = y
    for _ in range(bound):
        nxt = tuple(int(a) for a in apply_map(f, x))
        if nxt == y:
            return np.array(x, dtype=np.int64)
        if nxt in seen:
            raise NotOnCycle("orbit re-entered itself without returning to y")
        seen.add(nxt)
        x = nxt
    raise BoundExceeded(f"y did not recur within {bound} steps")


def _period_data(v: VectorSequence):
    if v.period is None:
        raise InsufficientData("oracles need a known period")
    return v.period


def exhaustive_scalar_minpoly(v: VectorSequence, max_deg: int) -> Poly:
    """First monic polynomial, by ascending degree, annihilating the full period."""
    p = v.p
    N = _period_data(v)
    if p**max_deg > MAX_ENUMERATION:
        raise ValueError(f"{p}^{max_deg} candidates exceeds the enumeration cap")
    for k in range(max_deg + 1):
        t = v.window(N + k)
        target = t[k : k + N].reshape(-1)
        if k == 0:
            if not target.any():
                return Poly.one(p)
            continue
        # W[i] = V_{i+j} for every shift j, flattened over (j, component)
        W = np.stack([t[i : i + N].reshape(-1) for i in range(k)])
        total = p**k
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            C = (idx[:, None] // (p ** np.arange(k, dtype=np.int64))[None, :]) % p
            ok = ~(((C @ W) + target[None, :]) % p).any(axis=1)
            hit = np.flatnonzero(ok)
            if hit.size:
                return Poly(list(C[hit[0]]) + [1], p)
    raise NotFound(f"no annihilating polynomial of degree <= {max_deg}")


def independent_matrix_minpoly(v: VectorSequence, max_deg: int) -> MatrixPoly | None:
    """Least degree d <= max_deg with a unique monic matrix recurrence.

    Every degree is tried, with one equation block per shift over a whole
    period, and the solution must have a nonsingular constant coefficient.
    """
    p, n = v.p, v.n
    N = _period_data(v)
    for d in range(1, max_deg + 1):
        t = v.window(N + d)
        idx = np.arange(d)[:, None] + np.arange(N)[None, :]
        states = t[idx].transpose(0, 2, 1).reshape(d * n, N)
        rhs = (-t[d : d + N].T) % p
        try:
            blocks = solve_left(states, rhs, p)
        except NonUnique:
            # the degree-d states are the top rows of every larger degree's,
            # so dependent rows here stay dependent for all d' > d
            return None
        except NoSolution:
            continue
        A = [blocks[:, i * n : (i + 1) * n] for i in range(d)]
        if rank(A[0], p) < n:
            continue
        return MatrixPoly.monic_from_blocks(A, p)
    return None


def all_periodic_sequences(p: int, n: int, N: int):
    """Every sequence of period dividing N in GF(p)^n, as VectorSequences."""
    for flat in itertools.product(range(p), repeat=n * N):
        yield VectorSequence(np.array(flat, dtype=np.int64).reshape(N, n), p, N)
