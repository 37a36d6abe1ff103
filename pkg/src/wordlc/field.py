"""Arithmetic in prime fields GF(p).

Elements are immutable and always hold the canonical representative in
[0, p).  Bulk code elsewhere in the package works on plain integers or
numpy arrays reduced mod p; :class:`FieldElem` is the scalar-level API.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import DivisionByZero, ModulusMismatch

MAX_MODULUS = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_modulus(p: int) -> int:
    p = int(p)
    if not 2 <= p < MAX_MODULUS:
        raise ValueError(f"modulus {p} outside [2, 2^31)")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse mod {p}")
    r0, r1 = p, a
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    # r0 == gcd(a, p) == 1 for prime p
    if r0 != 1:
        raise DivisionByZero(f"{a} is not invertible mod {p}")
    return t0 % p


@dataclass(frozen=True)
class FieldParams:
    p: int

    def __post_init__(self):
        check_modulus(self.p)

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(value, self)

    def zero(self) -> FieldElem:
        return FieldElem(0, self)

    def one(self) -> FieldElem:
        return FieldElem(1, self)

    def __repr__(self):
        return f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def GF(p: int) -> FieldParams:
    """Return the (cached) parameters object for GF(p)."""
    return FieldParams(int(p))


class FieldElem:
    __slots__ = ("_value", "_field")

    def __init__(self, value: int, field: FieldParams):
        object.__setattr__(self, "_value", int(value) % field.p)
        object.__setattr__(self, "_field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @property
    def value(self) -> int:
        return self._value

    @property
    def field(self) -> FieldParams:
        return self._field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other._field.p != self._field.p:
                raise ModulusMismatch(f"GF({self._field.p}) vs GF({other._field.p})")
            return other._value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, value: int) -> FieldElem:
        return FieldElem(value, self._field)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self._value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self._value - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(b - self._value)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self._value * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self._value)

    def inverse(self) -> FieldElem:
        return self._new(inv_mod(self._value, self._field.p))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self._value * inv_mod(b, self._field.p))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self._value, k, self._field.p))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self._field.p == other._field.p and self._value == other._value
        if isinstance(other, int):
            return self._value == other % self._field.p
        return NotImplemented

    def __hash__(self):
        return hash((self._value, self._field.p))

    def __bool__(self):
        return self._value != 0

    def __int__(self):
        return self._value

    __index__ = __int__

    def __repr__(self):
        return f"{self._value} (mod {self._field.p})"


def field_add(a: FieldElem, b: FieldElem) -> FieldElem:
    _same_field(a, b)
    return a + b


def field_sub(a: FieldElem, b: FieldElem) -> FieldElem:
    _same_field(a, b)
    return a - b


def field_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    _same_field(a, b)
    return a * b


def field_neg(a: FieldElem) -> FieldElem:
    return -a


def field_inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def _same_field(a: FieldElem, b: FieldElem) -> None:
    if a.field.p != b.field.p:
        raise ModulusMismatch(f"GF({a.field.p}) vs GF({b.field.p})")
