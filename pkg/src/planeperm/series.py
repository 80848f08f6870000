"""Exact integer-coefficient univariate series truncated at a fixed degree.

All arithmetic is exact over Python ints.  Inversion requires the constant
term to be a unit (+1 or -1), which covers every rational expression used by
the counting checks once the shared polynomial factors are cancelled.
"""
from __future__ import annotations

from collections.abc import Sequence

from .errors import DomainError


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], degree: int | None = None):
        data = list(coeffs)
        if degree is not None:
            data = data[: degree + 1] + [0] * (degree + 1 - len(data))
        if not data:
            data = [0]
        self.coeffs = tuple(int(c) for c in data)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls([0], degree)

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls([1], degree)

    @classmethod
    def x_power(cls, k: int, degree: int) -> "TruncatedSeries":
        coeffs = [0] * (degree + 1)
        if 0 <= k <= degree:
            coeffs[k] = 1
        return cls(coeffs, degree)

    @classmethod
    def one_minus_x_power(cls, s: int, degree: int) -> "TruncatedSeries":
        """The polynomial 1 - x^s."""
        return cls.one(degree) - cls.x_power(s, degree)

    def coefficient(self, p: int) -> int:
        if p < 0:
            return 0
        if p > self.degree:
            raise DomainError(f"coefficient {p} beyond truncation degree {self.degree}")
        return self.coeffs[p]

    def _check(self, other: "TruncatedSeries") -> None:
        if self.degree != other.degree:
            raise DomainError("degree mismatch between truncated series")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs])

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries([c * a for a in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        d = self.degree
        out = [0] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(d + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k."""
        d = self.degree
        out = [0] * (d + 1)
        for i in range(d + 1 - k):
            out[i + k] = self.coeffs[i]
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        f0 = self.coeffs[0]
        if f0 not in (1, -1):
            raise DomainError("inversion requires a unit constant term")
        d = self.degree
        out = [0] * (d + 1)
        out[0] = f0
        for n in range(1, d + 1):
            acc = 0
            for k in range(1, n + 1):
                fk = self.coeffs[k]
                if fk:
                    acc += fk * out[n - k]
            out[n] = -f0 * acc
        return TruncatedSeries(out)

    def pow(self, exponent: int) -> "TruncatedSeries":
        base = self if exponent >= 0 else self.inverse()
        result = TruncatedSeries.one(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"
