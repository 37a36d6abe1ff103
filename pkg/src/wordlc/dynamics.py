"""Maps F: GF(p)^n -> GF(p)^n, their orbits, and local inversion.

Points of GF(p)^n are encoded as integers with component 0 least
significant: index(x) = sum_i x_i p^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    BoundExceeded,
    DimensionMismatch,
    EncodingOutOfRange,
    Exhausted,
    InsufficientData,
    NotPeriodic,
    SingularConstantCoefficient,
    TooLarge,
    ZeroConstantTerm,
)
from .field import check_modulus
from .linalg import as_matrix, mat_vec_mul
from .sequence import VectorSequence
from .wlc import (
    WlcReport,
    compute_wlc,
    local_inverse_from_matrix_minpoly,
    local_inverse_from_scalar_minpoly,
)

MAX_TABLE_SIZE = 2**20
_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 generator; identical streams in any language for a seed."""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


def encode(x, p: int) -> int:
    idx = 0
    for c in reversed([int(a) for a in x]):
        if not 0 <= c < p:
            raise EncodingOutOfRange(f"component {c} outside [0, {p})")
        idx = idx * p + c
    return idx


def decode(idx: int, p: int, n: int) -> np.ndarray:
    if not 0 <= idx < p**n:
        raise EncodingOutOfRange(f"index {idx} outside [0, {p}^{n})")
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        idx, out[i] = divmod(idx, p)
    return out


@dataclass(frozen=True, eq=False)
class MapSpec:
    kind: str  # "affine" or "table"
    p: int
    n: int
    matrix: np.ndarray | None = None
    offset: np.ndarray | None = None
    table: np.ndarray | None = None  # (p^n, n) images

    @classmethod
    def affine(cls, A, b, p: int) -> MapSpec:
        p = check_modulus(p)
        A = as_matrix(A, p)
        n = A.shape[0]
        if A.shape != (n, n):
            raise DimensionMismatch(f"affine matrix must be square, got {A.shape}")
        b = as_matrix(b, p).reshape(-1)
        if b.shape != (n,):
            raise DimensionMismatch(f"offset has {b.size} entries, expected {n}")
        A.setflags(write=False)
        b.setflags(write=False)
        return cls("affine", p, n, matrix=A, offset=b)

    @classmethod
    def from_table(cls, table, p: int, n: int) -> MapSpec:
        p = check_modulus(p)
        t = np.array(table, dtype=np.int64)
        if t.ndim == 1 and n == 1:
            t = t.reshape(-1, 1)
        if t.shape != (p**n, n):
            raise DimensionMismatch(f"table shape {t.shape}, expected ({p**n}, {n})")
        if t.min(initial=0) < 0 or t.max(initial=0) >= p:
            raise EncodingOutOfRange("table entries must lie in [0, p)")
        t.setflags(write=False)
        return cls("table", p, n, table=t)

    @classmethod
    def from_successors(cls, succ, p: int, n: int) -> MapSpec:
        """Table map given as successor indices: F(decode(k)) = decode(succ[k])."""
        succ = np.asarray(succ, dtype=np.int64)
        digits = (succ[:, None] // (p ** np.arange(n))[None, :]) % p
        return cls.from_table(digits, p, n)

    @property
    def size(self) -> int:
        return self.p**self.n

    def successors(self) -> np.ndarray:
        """Index-level form of a table map."""
        if self.kind != "table":
            raise ValueError("successor indices exist only for table maps")
        weights = self.p ** np.arange(self.n, dtype=np.int64)
        return self.table @ weights

    def __call__(self, x) -> np.ndarray:
        return apply_map(self, x)


def _vector(x, f: MapSpec) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64).reshape(-1)
    if x.shape != (f.n,):
        raise DimensionMismatch(f"point has {x.size} components, expected {f.n}")
    return x


def apply_map(f: MapSpec, x) -> np.ndarray:
    x = _vector(x, f)
    if f.kind == "affine":
        return (mat_vec_mul(f.matrix, x, f.p) + f.offset) % f.p
    return f.table[encode(x, f.p)].copy()


def iterate_map(f: MapSpec, y, count: int) -> VectorSequence:
    """V_0 = y, V_{k+1} = F(V_k), for ``count`` terms."""
    if count < 1:
        raise ValueError("count must be >= 1")
    y = _vector(y, f) % f.p
    out = np.empty((count, f.n), dtype=np.int64)
    out[0] = y
    if f.kind == "table":
        succ = f.successors()
        k = encode(y, f.p)
        for i in range(1, count):
            out[i] = f.table[k]
            k = int(succ[k])
    else:
        x = y
        for i in range(1, count):
            x = apply_map(f, x)
            out[i] = x
    return VectorSequence(out, f.p)


class OrbitInfo(NamedTuple):
    preperiod: int
    period: int
    total_steps: int


def detect_period(f: MapSpec, y, bound: int) -> OrbitInfo:
    """Brent's cycle detection on the orbit of y; needs preperiod + period <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    step = (lambda x: tuple(apply_map(f, x)))
    x0 = tuple(int(a) for a in _vector(y, f) % f.p)
    steps = 0
    power = lam = 1
    tortoise = x0
    hare = step(x0)
    steps += 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        steps += 1
        lam += 1
        # Brent's first phase needs fewer than 4 (mu + lam) + 2 steps
        if lam > bound or steps > 4 * bound + 2:
            raise BoundExceeded(f"no cycle closed within {bound} steps")
    tortoise = hare = x0
    for _ in range(lam):
        hare = step(hare)
        steps += 1
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        steps += 2
        mu += 1
        if mu + lam > bound:
            raise BoundExceeded(f"preperiod + period exceeds {bound}")
    if mu + lam > bound:
        raise BoundExceeded(f"preperiod + period exceeds {bound}")
    return OrbitInfo(mu, lam, steps)


class Inversion(NamedTuple):
    x: np.ndarray
    report: WlcReport
    route: str  # "matrix" or "scalar"
    terms: int


def local_invert(f: MapSpec, y, max_terms: int = 4096, start_terms: int = 16) -> Inversion:
    """Find x with F(x) = y from a growing prefix of the orbit of y.

    The prefix length doubles from ``start_terms``; at each length the
    minimal polynomials are recomputed and the candidate prefix element is
    accepted only when F maps it to y.
    """
    if max_terms < 4:
        raise ValueError("max_terms must be >= 4")
    y = _vector(y, f) % f.p
    try:
        info = detect_period(f, y, max_terms)
    except BoundExceeded:
        info = None
    if info is not None and info.preperiod > 0:
        raise NotPeriodic(f"y lies on a chain with preperiod {info.preperiod}")

    last_error: Exception | None = None
    M = max(4, min(start_terms, max_terms))
    while True:
        seq = iterate_map(f, y, M)
        try:
            report = compute_wlc(seq)
            if report.nontrivial:
                x = local_inverse_from_matrix_minpoly(seq, report.matrix_minpoly)
                route = "matrix"
            else:
                x = local_inverse_from_scalar_minpoly(seq, report.scalar_minpoly)
                route = "scalar"
        except (InsufficientData, ZeroConstantTerm, SingularConstantCoefficient) as exc:
            last_error = exc
        else:
            if np.array_equal(apply_map(f, x), y):
                return Inversion(x, report, route, M)
            last_error = None
        if M >= max_terms:
            break
        M = min(2 * M, max_terms)
    if isinstance(last_error, ZeroConstantTerm):
        raise ZeroConstantTerm(f"constant term stayed zero up to {max_terms} terms")
    raise Exhausted(f"no verified inverse within {max_terms} terms")


def draw_map(rng: SplitMix64, p: int, n: int, permutation: bool = True) -> MapSpec:
    """Table map drawn from ``rng``.

    Permutations use Fisher-Yates (for i = size-1 .. 1 swap i with
    next() % (i + 1)); arbitrary maps draw each image index as next() % size.
    """
    p = check_modulus(p)
    size = p**n
    if size > MAX_TABLE_SIZE:
        raise TooLarge(f"{p}^{n} exceeds {MAX_TABLE_SIZE} points")
    if permutation:
        succ = list(range(size))
        for i in range(size - 1, 0, -1):
            j = rng.below(i + 1)
            succ[i], succ[j] = succ[j], succ[i]
    else:
        succ = [rng.below(size) for _ in range(size)]
    return MapSpec.from_successors(succ, p, n)


def random_map(p: int, n: int, seed: int, permutation: bool = True) -> MapSpec:
    """Deterministic pseudorandom table map: same seed, same table."""
    return draw_map(SplitMix64(seed), p, n, permutation)
