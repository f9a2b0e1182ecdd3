"""Exact Gaussian rationals and rational points on the unit circle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i)."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(as_fraction(x), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """|z|^2."""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GaussianRational(1)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


@dataclass(frozen=True)
class CirclePoint:
    """A point of the unit circle with rational half-angle tangent.

    ``parameter`` is ``u = tan(theta/2)``; ``None`` stands for the point
    at infinity, omega = -1. The map u -> omega is monotone in the angle,
    so ordering points by ``u`` orders them by angle in (-pi, pi).
    """

    parameter: Optional[Fraction]

    def __post_init__(self):
        if self.parameter is not None:
            object.__setattr__(self, "parameter", as_fraction(self.parameter))

    @classmethod
    def from_u(cls, u) -> "CirclePoint":
        return cls(as_fraction(u))

    @classmethod
    def minus_one(cls) -> "CirclePoint":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "CirclePoint":
        t = text.strip().lower()
        if t in ("inf", "infinity", "oo"):
            return cls(None)
        return cls(Fraction(t))

    @property
    def is_infinite(self) -> bool:
        return self.parameter is None

    @property
    def value(self) -> GaussianRational:
        return circle_point_value(self)

    @property
    def cosine(self) -> Fraction:
        """Re(omega), i.e. cos(theta)."""
        if self.parameter is None:
            return Fraction(-1)
        u2 = self.parameter * self.parameter
        return (1 - u2) / (1 + u2)

    def angle(self) -> float:
        """Approximate angle in (-pi, pi]. Display only."""
        if self.parameter is None:
            return math.pi
        return 2.0 * math.atan(float(self.parameter))

    def conjugate(self) -> "CirclePoint":
        if self.parameter is None:
            return self
        return CirclePoint(-self.parameter)

    def __str__(self):
        return "inf" if self.parameter is None else str(self.parameter)


def circle_point_value(p: CirclePoint) -> GaussianRational:
    """omega = ((1 - u^2) + 2u i) / (1 + u^2); the point at infinity is -1."""
    if p.parameter is None:
        return GaussianRational(-1)
    u = p.parameter
    d = 1 + u * u
    return GaussianRational((1 - u * u) / d, 2 * u / d)
