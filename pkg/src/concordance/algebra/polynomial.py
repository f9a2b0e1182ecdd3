"""Dense univariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .gaussian import GaussianRational, as_fraction


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class Polynomial:
    """Polynomial with exact rational coefficients, lowest degree first.

    Instances are immutable. The zero polynomial has no coefficients and
    degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = ()):
        c = [as_fraction(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, a) -> "Polynomial":
        return cls([a])

    @property
    def coefficients(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Polynomial({[str(a) for a in self._c]})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("c" if k == 1 else f"c^{k}")
            if mono and abs(a) == 1:
                coef = "-" if a < 0 else ""
            else:
                coef = str(a) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        a = self._c + (Fraction(0),) * (n - len(self._c))
        b = o._c + (Fraction(0),) * (n - len(o._c))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-a for a in self._c)

    def __sub__(self, other):
        try:
            return self + (-self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(a * other for a in self._c)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._c or not other._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        q = [Fraction(0)] * max(len(r) - len(d._c) + 1, 0)
        lead = d._c[-1]
        for k in range(len(r) - len(d._c), -1, -1):
            f = r[k + len(d._c) - 1] / lead
            q[k] = f
            if f:
                for j, b in enumerate(d._c):
                    r[k + j] -= f * b
        return Polynomial(q), Polynomial(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # evaluation and calculus

    def __call__(self, x):
        """Horner evaluation at a rational, Gaussian rational or Polynomial."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
        elif isinstance(x, GaussianRational):
            acc = GaussianRational(0)
        elif isinstance(x, Polynomial):
            acc = Polynomial()
        else:
            x = as_fraction(x)
            acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(k * a for k, a in enumerate(self._c) if k)

    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        return self * (1 / self._c[-1])

    def primitive(self) -> "Polynomial":
        """Positive rational multiple with coprime integer coefficients.

        The scaling factor is positive, so signs of values are preserved.
        """
        if not self._c:
            return self
        den = 1
        for a in self._c:
            den = _lcm(den, a.denominator)
        ints = [int(a * den) for a in self._c]
        g = 0
        for a in ints:
            g = gcd(g, a)
        return Polynomial(Fraction(a // g) for a in ints)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while b:
            a, b = b, (a % b).primitive()
        return a.monic()

    def squarefree(self) -> "Polynomial":
        """Square-free part p / gcd(p, p'), as a primitive polynomial."""
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        return (self // g).primitive()

    def compose(self, inner: "Polynomial") -> "Polynomial":
        return self(inner)

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)


def chebyshev_t(k: int) -> Polynomial:
    """Chebyshev polynomial T_k with cos(k t) = T_k(cos t)."""
    t0, t1 = Polynomial([1]), Polynomial([0, 1])
    if k == 0:
        return t0
    two_c = Polynomial([0, 2])
    for _ in range(k - 1):
        t0, t1 = t1, two_c * t1 - t0
    return t1


def cosine_series_to_polynomial(series: Mapping[int, object]) -> Polynomial:
    """Rewrite sum_k a_k cos(k t) as a polynomial in c = cos t."""
    out = Polynomial()
    for k, a in series.items():
        if k < 0:
            raise ValueError("cosine series indices must be nonnegative")
        out = out + chebyshev_t(k) * as_fraction(a)
    return out


def interpolate(xs: Sequence, ys: Sequence) -> Polynomial:
    """Lagrange interpolation through exact points (xs distinct)."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    out = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        out = out + basis * (as_fraction(yi) / denom)
    return out
