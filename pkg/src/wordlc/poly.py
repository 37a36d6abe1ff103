"""Scalar polynomials over GF(p) and the scalar minimal polynomial.

A polynomial a_0 + a_1 X + ... + a_k X^k is stored as the tuple
(a_0, ..., a_k) with a_k != 0; the zero polynomial is the empty tuple and
has degree ``-inf``.  Printing uses descending powers.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import InsufficientData, NonUnique, NoSolution, OrderExceedsBound, ZeroConstantTerm
from .field import check_modulus, inv_mod
from .linalg import rank, solve_right
from .sequence import VectorSequence

NEG_INF = -math.inf


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Iterable[int], p: int):
        self.p = p
        self.coeffs = _trim([int(a) % p for a in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], p: int) -> Poly:
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, p: int) -> Poly:
        return cls._raw((), p)

    @classmethod
    def one(cls, p: int) -> Poly:
        return cls._raw((1,), p)

    @classmethod
    def monomial(cls, k: int, p: int, c: int = 1) -> Poly:
        return cls([0] * k + [c], p)

    @classmethod
    def from_descending(cls, coeffs: Sequence[int], p: int) -> Poly:
        return cls(list(coeffs)[::-1], p)

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs)) if self.coeffs else [0]

    def _check(self, other: Poly) -> None:
        if self.p != other.p:
            raise ValueError(f"GF({self.p}) vs GF({other.p}) polynomials")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.p)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)], self.p)

    def __neg__(self) -> Poly:
        return Poly([-a for a in self.coeffs], self.p)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly([a * other for a in self.coeffs], self.p)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, p)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        result = Poly.one(self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = inv_mod(other.lead, p)
        if len(r) - 1 < db:
            return Poly.zero(p), Poly._raw(tuple(r), p)
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv_lead % p
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] = (r[k + j] - c * b) % p
        return Poly(q, p), Poly(r[:db], p)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = inv_mod(self.lead, self.p)
        return Poly([a * inv for a in self.coeffs], self.p)

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % self.p
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if not mono:
                terms.append(str(a))
            else:
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({str(self)!r}, p={self.p})"


# -- gcd / lcm / order ----------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.p)
    return (a * b // poly_gcd(a, b)).monic()


def poly_divides(a: Poly, b: Poly) -> bool:
    """True when a | b; the zero polynomial divides only zero."""
    if a.is_zero():
        return b.is_zero()
    return (b % a).is_zero()


def poly_order(f: Poly, bound: int) -> int:
    """Least N <= bound with f | X^N - 1."""
    if f.is_zero() or f.deg < 1:
        raise ValueError("order needs a polynomial of degree >= 1")
    if f[0] == 0:
        raise ZeroConstantTerm("f(0) = 0, so f divides no X^N - 1")
    one = Poly.one(f.p)
    x = Poly.monomial(1, f.p) % f
    power = x
    for k in range(1, bound + 1):
        if power == one:
            return k
        power = power * x % f
    raise OrderExceedsBound(f"order of {f} exceeds {bound}")


def x_pow_minus_one(N: int, p: int) -> Poly:
    return Poly([p - 1] + [0] * (N - 1) + [1], p)


# -- recurrences ----------------------------------------------------------


def recurrence_holds(f: Poly, terms: np.ndarray, p: int) -> bool:
    """Does sum_i f_i V_{i+j} = 0 hold for every shift j within ``terms``?"""
    k = len(f.coeffs) - 1
    if k < 0:
        return True
    t = np.asarray(terms, dtype=np.int64)
    if t.ndim == 1:
        t = t.reshape(-1, 1)
    span = t.shape[0] - k
    if span <= 0:
        return True
    acc = np.zeros((span, t.shape[1]), dtype=np.int64)
    for i, a in enumerate(f.coeffs):
        if a:
            acc = (acc + a * t[i : i + span]) % p
    return not acc.any()


def hankel(v: VectorSequence, k: int) -> np.ndarray:
    """Stacked Hankel matrix of size (k*n) x k; block (i, j) is V_{i+j}."""
    if k <= 0:
        return np.zeros((0, 0), dtype=np.int64)
    t = v.window(2 * k - 1)
    idx = np.arange(k)[:, None] + np.arange(k)[None, :]
    # blocks[i, j] = V_{i+j}, shape (k, k, n) -> (k, n, k)
    blocks = t[idx]
    return blocks.transpose(0, 2, 1).reshape(k * v.n, k).copy()


def _hankel_depth(v: VectorSequence) -> int:
    if v.period is not None:
        # LC <= N, so H(N + 1) always shows one stabilization step
        return v.period + 1
    return (len(v) + 1) // 2


def hankel_scalar_minpoly(v: VectorSequence) -> Poly:
    """Monic minimal polynomial of the vector sequence via Hankel ranks.

    rank H(k) is nondecreasing in k, so one rank at the largest available
    depth K covers every stabilization step H(m + j), j = 1 .. K - m.
    """
    p = v.p
    K = _hankel_depth(v)
    if K <= 0:
        raise InsufficientData("empty sequence")
    R = rank(hankel(v, K), p)
    if R >= K:
        raise InsufficientData(f"Hankel rank {R} has not stabilized by depth {K}")
    if R == 0:
        m = Poly.one(p)
    else:
        n = v.n
        t = v.window(2 * R)
        rhs = (-t[R : 2 * R]).reshape(R * n, 1) % p
        try:
            alpha = solve_right(hankel(v, R), rhs, p).reshape(-1)
        except (NonUnique, NoSolution):
            raise InsufficientData(f"H({R}) does not have full rank {R}; need more terms") from None
        m = Poly(list(alpha) + [1], p)
    check = v.window(2 * K - 1) if v.period is not None else v.terms
    if not recurrence_holds(m, check, p):
        raise InsufficientData("candidate recurrence fails on later terms")
    return m


def berlekamp_massey(s: Sequence[int], p: int) -> Poly:
    """Minimal polynomial of a scalar sequence, V_{L+j} + sum a_i V_{i+j} = 0 form."""
    p = check_modulus(p)
    s = [int(x) % p for x in s]
    C = [1]
    B = [1]
    L = 0
    shift = 1
    b = 1
    for i, si in enumerate(s):
        d = si
        for j in range(1, L + 1):
            if j < len(C):
                d += C[j] * s[i - j]
        d %= p
        if d == 0:
            shift += 1
            continue
        coef = d * inv_mod(b, p) % p
        T = C
        C = C + [0] * max(0, len(B) + shift - len(C))
        for j, bj in enumerate(B):
            C[j + shift] = (C[j + shift] - coef * bj) % p
        if 2 * L <= i:
            L = i + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    C = C + [0] * (L + 1 - len(C))
    # reverse the connection polynomial: X^L C(1/X)
    return Poly([C[L - k] for k in range(L + 1)], p)


def component_minpoly_lcm(v: VectorSequence) -> Poly:
    """lcm of the per-component Berlekamp-Massey minimal polynomials."""
    p = v.p
    count = 2 * v.period if v.period is not None else len(v)
    data = v.window(count)
    result = Poly.one(p)
    for c in range(v.n):
        f = berlekamp_massey(data[:, c], p)
        if 2 * (len(f.coeffs) - 1) > count:
            raise InsufficientData(f"component {c}: {count} terms cannot fix LC")
        result = poly_lcm(result, f)
    return result
