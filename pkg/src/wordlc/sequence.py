"""Vector-valued sequences over GF(p)."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, InsufficientData
from .field import check_modulus


class VectorSequence:
    """Terms V_0, ..., V_{M-1} in GF(p)^n, optionally with a known period.

    ``terms`` is stored as an (M, n) array: row i is V_i.  When ``period`` is
    set, any index can be read by periodic extension.
    """

    __slots__ = ("p", "terms", "period")

    def __init__(self, terms, p: int, period: int | None = None, check: bool = True):
        p = check_modulus(p)
        t = np.array(terms, dtype=np.int64)
        if t.ndim == 1:
            t = t.reshape(-1, 1)
        if t.ndim != 2:
            raise DimensionMismatch(f"terms must be (M, n), got shape {t.shape}")
        if t.shape[1] < 1:
            raise DimensionMismatch("vector dimension must be at least 1")
        t %= p
        t.setflags(write=False)
        if period is not None:
            period = int(period)
            if period < 1:
                raise ValueError("period must be positive")
            if t.shape[0] == 0:
                raise InsufficientData("a periodic sequence needs at least one term")
            if period > t.shape[0]:
                raise InsufficientData(
                    f"period {period} exceeds the {t.shape[0]} stored terms"
                )
            if check and not self._consistent(t, period):
                raise ValueError(f"stored terms are not {period}-periodic")
        self.p = p
        self.terms = t
        self.period = period

    @staticmethod
    def _consistent(t: np.ndarray, period: int) -> bool:
        return bool(np.array_equal(t[period:], t[: t.shape[0] - period]))

    @classmethod
    def from_columns(cls, rows, p: int, period: int | None = None) -> VectorSequence:
        """Build from an n x M array whose columns are the terms (one column per term)."""
        return cls(np.array(rows, dtype=np.int64).T, p, period)

    @property
    def n(self) -> int:
        return self.terms.shape[1]

    def __len__(self) -> int:
        return self.terms.shape[0]

    def is_consistent(self) -> bool:
        """True when the stored prefix agrees with the declared period."""
        return self.period is None or self._consistent(self.terms, self.period)

    def available(self, count: int) -> bool:
        return self.period is not None or count <= len(self)

    def window(self, count: int) -> np.ndarray:
        """First ``count`` terms as a (count, n) array, extending periodically."""
        if count <= len(self):
            return self.terms[:count]
        if self.period is None:
            raise InsufficientData(f"need {count} terms, have {len(self)}")
        idx = np.arange(count) % self.period
        return self.terms[idx]

    def term(self, i: int) -> np.ndarray:
        if self.period is not None:
            return self.terms[i % self.period].copy()
        if not 0 <= i < len(self):
            raise InsufficientData(f"term {i} not available")
        return self.terms[i].copy()

    def component(self, c: int, count: int | None = None) -> np.ndarray:
        if count is None:
            return self.terms[:, c].copy()
        return self.window(count)[:, c].copy()

    def prepend(self, v) -> VectorSequence:
        v = np.asarray(v, dtype=np.int64).reshape(1, -1)
        return VectorSequence(np.vstack([v, self.terms]), self.p)

    def one_period(self) -> VectorSequence:
        if self.period is None:
            raise InsufficientData("period unknown")
        return VectorSequence(self.terms[: self.period], self.p, self.period)

    def __eq__(self, other):
        if not isinstance(other, VectorSequence):
            return NotImplemented
        return (
            self.p == other.p
            and self.period == other.period
            and np.array_equal(self.terms, other.terms)
        )

    def __repr__(self):
        per = f", period={self.period}" if self.period is not None else ""
        return f"VectorSequence(M={len(self)}, n={self.n}, p={self.p}{per})"
