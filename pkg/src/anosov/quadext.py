"""Exact arithmetic in Q(sqrt(D)) for a positive non-square integer D."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .linalg import as_fraction


@dataclass(frozen=True)
class QuadExtScalar:
    """The number ``u + v * sqrt(D)``."""

    u: Fraction
    v: Fraction
    D: int

    def __post_init__(self):
        if self.D <= 0 or isqrt(self.D) ** 2 == self.D:
            raise ValueError(f"D = {self.D} must be a positive non-square integer")
        object.__setattr__(self, "u", as_fraction(self.u))
        object.__setattr__(self, "v", as_fraction(self.v))

    @classmethod
    def rational(cls, x, D: int) -> QuadExtScalar:
        return cls(as_fraction(x), Fraction(0), D)

    @classmethod
    def sqrt_d(cls, D: int) -> QuadExtScalar:
        return cls(Fraction(0), Fraction(1), D)

    def _coerce(self, other) -> QuadExtScalar:
        if isinstance(other, QuadExtScalar):
            if other.D != self.D:
                raise ValueError(f"mixing Q(sqrt {self.D}) with Q(sqrt {other.D})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtScalar(Fraction(other), Fraction(0), self.D)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtScalar(self.u + o.u, self.v + o.v, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar(-self.u, -self.v, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtScalar(self.u - o.u, self.v - o.v, self.D)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtScalar(self.u * o.u + self.D * self.v * o.v,
                             self.u * o.v + o.u * self.v, self.D)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExtScalar:
        return QuadExtScalar(self.u, -self.v, self.D)

    def norm(self) -> Fraction:
        return self.u * self.u - self.D * self.v * self.v

    def inverse(self) -> QuadExtScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QuadExtScalar(self.u / n, -self.v / n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> QuadExtScalar:
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadExtScalar(Fraction(1), Fraction(0), self.D)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            return (self.u, self.v, self.D) == (other.u, other.v, other.D)
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self):
        return hash((self.u, self.v, self.D))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def is_rational(self) -> bool:
        return self.v == 0

    def __float__(self):
        return float(self.u) + float(self.v) * self.D ** 0.5

    def __str__(self):
        return f"{self.u} + {self.v}*sqrt({self.D})"


def larger_root(a: int) -> QuadExtScalar:
    """``a + sqrt(a^2 - 1)``, the root above 1 of ``x^2 - 2 a x + 1``."""
    if a < 2:
        raise ValueError("a must be an integer >= 2")
    return QuadExtScalar(Fraction(a), Fraction(1), a * a - 1)
