"""Truncated power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntegerPowerSeries:
    """Coefficients ``c_0 .. c_N`` of a series known modulo ``t^(N+1)``."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int], N: int) -> "IntegerPowerSeries":
        c = list(coeffs[: N + 1]) + [0] * max(0, N + 1 - len(coeffs))
        return cls(tuple(c))

    @classmethod
    def one(cls, N: int) -> "IntegerPowerSeries":
        return cls.from_polynomial([1], N)

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    def _align(self, other: "IntegerPowerSeries") -> int:
        return min(self.N, other.N)

    def __add__(self, other: "IntegerPowerSeries") -> "IntegerPowerSeries":
        N = self._align(other)
        return IntegerPowerSeries(tuple(self[k] + other[k] for k in range(N + 1)))

    def __sub__(self, other: "IntegerPowerSeries") -> "IntegerPowerSeries":
        N = self._align(other)
        return IntegerPowerSeries(tuple(self[k] - other[k] for k in range(N + 1)))

    def __neg__(self) -> "IntegerPowerSeries":
        return IntegerPowerSeries(tuple(-c for c in self.coefficients))

    def scale(self, k: int) -> "IntegerPowerSeries":
        return IntegerPowerSeries(tuple(k * c for c in self.coefficients))

    def __mul__(self, other: "IntegerPowerSeries") -> "IntegerPowerSeries":
        N = self._align(other)
        a, b = self.coefficients, other.coefficients
        out = [0] * (N + 1)
        for i in range(N + 1):
            if a[i]:
                ai = a[i]
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return IntegerPowerSeries(tuple(out))

    def __pow__(self, k: int) -> "IntegerPowerSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = IntegerPowerSeries.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "IntegerPowerSeries":
        """Multiplicative inverse; requires constant coefficient +-1."""
        c0 = self[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("constant coefficient is not a unit in Z")
        out = [c0]
        for n in range(1, self.N + 1):
            s = sum(self[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s * c0)
        return IntegerPowerSeries(tuple(out))

    def __truediv__(self, other: "IntegerPowerSeries") -> "IntegerPowerSeries":
        return self * other.inverse()

    def truncate(self, N: int) -> "IntegerPowerSeries":
        return IntegerPowerSeries(self.coefficients[: N + 1])


def geometric(a: int, N: int) -> IntegerPowerSeries:
    """1 / (1 - a t)."""
    return IntegerPowerSeries(tuple(a ** n for n in range(N + 1)))
