"""Test data: three small reference sequences over GF(2) and random generators."""

from __future__ import annotations

import numpy as np

from wordlc.dynamics import MapSpec
from wordlc.linalg import rank
from wordlc.sequence import VectorSequence

# terms are the columns of these arrays
LC7_ROWS = [[1, 0, 0, 0, 1, 0, 1], [0, 0, 0, 1, 0, 1, 1], [0, 0, 1, 0, 1, 1, 1]]
LC5_ROWS = [[1, 0, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]]
WLC3_ROWS = [[1, 0, 0, 0, 1, 0], [1, 0, 1, 1, 0, 0]]

LC5_BLOCK_HANKEL = [
    [1, 0, 0, 0, 1, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [1, 1, 0, 0, 0, 0],
]

WLC3_A = [[[0, 1], [1, 1]], [[0, 0], [0, 1]], [[1, 1], [0, 1]]]
WLC3_Q = [[[1, 1], [1, 0]], [[1, 0], [0, 0]], [[1, 1], [0, 1]]]  # Q0, Q1, Q2


def seq_lc7() -> VectorSequence:
    return VectorSequence.from_columns(LC7_ROWS, 2, 7)


def seq_lc5() -> VectorSequence:
    return VectorSequence.from_columns(LC5_ROWS, 2, 6)


def seq_wlc3() -> VectorSequence:
    return VectorSequence.from_columns(WLC3_ROWS, 2, 6)


def four_cycle_map() -> MapSpec:
    """Table map on GF(2)^2 sending index k to k + 1 mod 4."""
    return MapSpec.from_successors([1, 2, 3, 0], 2, 2)


def chain_map() -> MapSpec:
    """GF(3)^1 table 0 -> 1, 1 -> 2, 2 -> 1: point 0 has preperiod 1, period 2."""
    return MapSpec.from_table([[1], [2], [1]], 3, 1)


def wlc3_companion_map() -> MapSpec:
    """Linear map on stacked states (V_j, V_{j+1}, V_{j+2}) realising seq_wlc3.

    seq_wlc3 repeats vectors (V_2 = V_3), so no map on GF(2)^2 has it as an
    orbit; its degree-3 recurrence does act as a map on GF(2)^6.
    """
    from wordlc.matpoly import MatrixPoly
    from wordlc.wlc import companion_map_matrix

    M = MatrixPoly.monic_from_blocks(WLC3_A, 2)
    return MapSpec.affine(companion_map_matrix(M), np.zeros(6, dtype=np.int64), 2)


def random_periodic(rng: np.random.Generator, p: int, n: int, N: int) -> VectorSequence:
    return VectorSequence(rng.integers(0, p, size=(N, n)), p, N)


def random_matrix_recurrence(
    rng: np.random.Generator, p: int, n: int, d: int, max_period: int = 256, tries: int = 200
) -> VectorSequence | None:
    """Periodic sequence generated by a random degree-d matrix recurrence.

    A_0 is drawn nonsingular so the state map is a bijection and every orbit
    is a pure cycle.  Returns None if no cycle of length <= max_period is hit.
    """
    for _ in range(tries):
        A = [rng.integers(0, p, size=(n, n)) for _ in range(d)]
        if rank(A[0], p) < n:
            continue
        state = [rng.integers(0, p, size=n) for _ in range(d)]
        if not any(s.any() for s in state):
            continue
        start = tuple(np.concatenate(state))
        terms = list(state)
        for _ in range(max_period):
            nxt = -sum(A[i] @ terms[-d + i] for i in range(d)) % p
            terms.append(nxt)
            if tuple(np.concatenate(terms[-d:])) == start:
                N = len(terms) - d
                return VectorSequence(np.array(terms[:N]), p, N)
    return None


def periodic_corpus(seed: int, count: int, ps=(2, 3, 5), ns=(2, 3, 4), max_period: int = 256):
    """Mix of raw random periodic sequences and matrix-recurrence sequences."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        p = int(rng.choice(ps))
        n = int(rng.choice(ns))
        if len(out) % 2 == 0:
            N = int(rng.integers(1, max_period + 1))
            out.append(random_periodic(rng, p, n, N))
        else:
            d = int(rng.integers(1, 4))
            v = random_matrix_recurrence(rng, p, n, d, max_period)
            if v is not None:
                out.append(v)
    return out
