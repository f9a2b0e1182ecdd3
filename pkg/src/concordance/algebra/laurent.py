"""Laurent polynomials over Q in one variable x."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping

from .gaussian import GaussianRational, as_fraction
from .polynomial import Polynomial


class LaurentPolynomial:
    """Finitely supported map exponent -> nonzero rational coefficient."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        t = {}
        for e, a in (terms or {}).items():
            a = as_fraction(a)
            if a:
                t[int(e)] = a
        self._t = dict(sorted(t.items()))

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_polynomial(cls, p: Polynomial, shift: int = 0) -> "LaurentPolynomial":
        """x^shift * p(x)."""
        return cls({k + shift: a for k, a in enumerate(p.coefficients)})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    @property
    def max_exponent(self) -> int:
        return max(self._t) if self._t else 0

    @property
    def min_exponent(self) -> int:
        return min(self._t) if self._t else 0

    def coefficient(self, e: int) -> Fraction:
        return self._t.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(tuple(self._t.items()))

    def __repr__(self):
        return f"LaurentPolynomial({ {e: str(a) for e, a in self._t.items()} })"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e in sorted(self._t, reverse=True):
            a = self._t[e]
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if mono and abs(a) == 1:
                coef = "-" if a < 0 else ""
            else:
                coef = str(a) + ("*" if mono else "")
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial({0: other})
        raise TypeError(f"cannot combine LaurentPolynomial with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for e, a in o._t.items():
            t[e] = t.get(e, 0) + a
        return LaurentPolynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -a for e, a in self._t.items()})

    def __sub__(self, other):
        try:
            return self + (-self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial({e: a * other for e, a in self._t.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        t: dict = {}
        for e1, a1 in self._t.items():
            for e2, a2 in other._t.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + a1 * a2
        return LaurentPolynomial(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._t) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, a), = self._t.items()
            return LaurentPolynomial({e * k: a ** k})
        result = LaurentPolynomial({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, z):
        return laurent_eval(self, z)

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """p(x^k)."""
        return LaurentPolynomial({e * k: a for e, a in self._t.items()})

    def inverted(self) -> "LaurentPolynomial":
        """p(x^-1)."""
        return self.substitute_power(-1)

    def is_symmetric(self) -> bool:
        return self == self.inverted()

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self._t)

    def half_angle_value(self, omega: GaussianRational) -> GaussianRational:
        """Value at x = omega^(1/2) for an even-exponent polynomial.

        Exponent 2k contributes omega^k, so the choice of square root does
        not matter.
        """
        if not self.is_even():
            raise ValueError("half-angle evaluation needs even exponents")
        return laurent_eval(self.substitute_half(), omega)

    def substitute_half(self) -> "LaurentPolynomial":
        """q with q(x^2) = p(x); needs even exponents."""
        if not self.is_even():
            raise ValueError("odd exponent present")
        return LaurentPolynomial({e // 2: a for e, a in self._t.items()})


def laurent_eval(p: LaurentPolynomial, z):
    """Exact value sum a_e z^e at a rational or Gaussian rational z."""
    if isinstance(z, GaussianRational):
        zero = z.re == 0 and z.im == 0
    else:
        z = as_fraction(z)
        zero = z == 0
    if zero and p.min_exponent < 0:
        raise ZeroDivisionError("negative exponent evaluated at zero")
    acc = GaussianRational(0) if isinstance(z, GaussianRational) else Fraction(0)
    for e, a in p.terms.items():
        acc = acc + (z ** e) * a
    return acc


def even_laurent_to_cosine(p: LaurentPolynomial) -> Polynomial:
    """Polynomial G with p(e^{it/2}) = G(cos t).

    ``p`` must be symmetric under x -> 1/x with only even exponents. With
    z = e^{it} the input is a symmetric Laurent polynomial q(z); its top
    term a z^d is peeled off by subtracting a (z + 1/z)^d = a (2 cos t)^d.
    """
    if not p.is_even():
        raise ValueError("input has odd exponents")
    if not p.is_symmetric():
        raise ValueError("input is not symmetric under x -> 1/x")
    q = dict(p.substitute_half().terms)
    out = Polynomial()
    while q:
        d = max(q)
        a = q[d]
        if d == 0:
            out = out + a
            break
        out = out + Polynomial([0, 2]) ** d * a
        # (z + 1/z)^d = sum_j C(d, j) z^(d - 2j)
        for j in range(d + 1):
            e = d - 2 * j
            q[e] = q.get(e, 0) - a * comb(d, j)
            if q[e] == 0:
                del q[e]
    return out
