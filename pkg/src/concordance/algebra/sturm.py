"""Real root isolation with Sturm sequences.

Remainders are made primitive by positive scaling after each division,
which keeps the Sturm sign pattern intact and the integers small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .gaussian import as_fraction
from .polynomial import Polynomial


def sturm_sequence(p: Polynomial) -> List[Polynomial]:
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p.primitive(), p.derivative().primitive()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append((-r).primitive())
    return [s for s in seq if not s.is_zero()]


def _variations(seq, x: Fraction) -> int:
    count, last = 0, 0
    for s in seq:
        v = s.sign_at(x)
        if v:
            if last and v != last:
                count += 1
            last = v
    return count


def count_roots(seq, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return _variations(seq, a) - _variations(seq, b)


def cauchy_bound(p: Polynomial) -> Fraction:
    """All real roots lie strictly inside (-B, B)."""
    c = p.coefficients
    lead = abs(c[-1])
    return 1 + max((abs(a) / lead for a in c[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class IsolatingInterval:
    """An interval holding exactly one root of a square-free polynomial.

    Either ``lo < hi`` with p(lo), p(hi) nonzero of opposite sign and the
    root strictly inside, or ``lo == hi`` when the root is rational and
    known exactly.
    """

    lo: Fraction
    hi: Fraction
    polynomial: Polynomial

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def bisect(self) -> "IsolatingInterval":
        if self.is_exact:
            return self
        p = self.polynomial
        m = self.midpoint
        sm = p.sign_at(m)
        if sm == 0:
            return IsolatingInterval(m, m, p)
        if sm == p.sign_at(self.lo):
            return IsolatingInterval(m, self.hi, p)
        return IsolatingInterval(self.lo, m, p)

    def refine(self, width) -> "IsolatingInterval":
        """Bisect until the width is at most ``width``."""
        width = as_fraction(width)
        if width <= 0:
            raise ValueError("refinement width must be positive")
        iv = self
        while iv.width > width:
            iv = iv.bisect()
        return iv

    def compare_rational(self, x) -> int:
        """Sign of (root - x), decided exactly without refinement."""
        x = as_fraction(x)
        if self.is_exact:
            return (self.lo > x) - (self.lo < x)
        if x <= self.lo:
            return 1
        if x >= self.hi:
            return -1
        sx = self.polynomial.sign_at(x)
        if sx == 0:
            return 0
        return 1 if sx == self.polynomial.sign_at(self.lo) else -1

    def sign_of(self, q: Polynomial) -> int:
        """Sign of q evaluated at the isolated root."""
        if self.is_exact:
            return q.sign_at(self.lo)
        if q.is_zero():
            return 0
        h = self.polynomial.gcd(q)
        if h.degree > 0 and h.sign_at(self.lo) != h.sign_at(self.hi):
            # h divides p, so a sign change of h here is the root itself
            return 0
        iv = self
        qs = sturm_sequence(q.squarefree()) if q.degree > 0 else None
        while qs is not None:
            if q.sign_at(iv.lo) and q.sign_at(iv.hi) and count_roots(qs, iv.lo, iv.hi) == 0:
                break
            iv = iv.bisect()
            if iv.is_exact:
                return q.sign_at(iv.lo)
        return q.sign_at(iv.lo)

    def compare(self, other: "IsolatingInterval") -> int:
        """Sign of (this root - other root)."""
        a, b = self, other
        if a.is_exact:
            return -b.compare_rational(a.lo)
        if b.is_exact:
            return a.compare_rational(b.lo)
        if b.sign_of(a.polynomial) == 0:
            # b's root is a root of a's polynomial; equal iff it is a's root
            while True:
                if b.hi <= a.lo:
                    return 1
                if b.lo >= a.hi:
                    return -1
                if a.lo <= b.lo and b.hi <= a.hi:
                    return 0
                b = b.bisect()
                if b.is_exact:
                    return a.compare_rational(b.lo)
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            a, b = (a.bisect(), b) if a.width >= b.width else (a, b.bisect())
            if a.is_exact:
                return -b.compare_rational(a.lo)
            if b.is_exact:
                return a.compare_rational(b.lo)


def sturm_isolate(p: Polynomial, lo, hi) -> List[IsolatingInterval]:
    """Isolate every real root of p in the closed window [lo, hi].

    Intervals come back sorted and pairwise disjoint. The square-free part
    of p is used internally and stored on each interval.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo > hi:
        raise ValueError("empty window")
    q = p.squarefree()
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)
    out: List[IsolatingInterval] = []
    if q.sign_at(lo) == 0:
        out.append(IsolatingInterval(lo, lo, q))
    if lo == hi:
        return out
    stack: List[Tuple[Fraction, Fraction, int]] = [(lo, hi, count_roots(seq, lo, hi))]
    found: List[IsolatingInterval] = []
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        sb = q.sign_at(b)
        if n == 1:
            if sb == 0:
                found.append(IsolatingInterval(b, b, q))
                continue
            if q.sign_at(a) != 0:
                found.append(IsolatingInterval(a, b, q))
                continue
        m = (a + b) / 2
        left = count_roots(seq, a, m)
        stack.append((a, m, left))
        stack.append((m, b, n - left))
    found.sort(key=lambda iv: iv.lo)
    return out + found


def real_roots(p: Polynomial) -> List[IsolatingInterval]:
    """Isolate all real roots of p."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree <= 0:
        return []
    b = cauchy_bound(p)
    return sturm_isolate(p, -b, b)


def simplest_rational_between(below, above, max_steps: int = 10**6) -> Fraction:
    """Simplest rational x with ``below(x)`` false and ``above(x)`` false.

    ``below(x)`` must be true exactly on an initial ray (-inf, L] or
    (-inf, L) and ``above(x)`` exactly on a final ray, with a nonempty
    open gap between them. Stern-Brocot descent returns the fraction of
    least denominator (then least numerator) in the gap.
    """
    # integer part first, then descent on the fractional part
    lo_n, lo_d, hi_n, hi_d = 0, 1, 1, 0
    lower = Fraction(0)
    if below(lower):
        k = 1
        while below(Fraction(k)):
            k *= 2
        a, b = k // 2, k
        while b - a > 1:
            mid = (a + b) // 2
            a, b = (mid, b) if below(Fraction(mid)) else (a, mid)
        lo_n, lo_d = a, 1
        if not above(Fraction(b)):
            return Fraction(b)
        hi_n, hi_d = b, 1
    elif above(lower):
        k = 1
        while above(Fraction(-k)):
            k *= 2
        a, b = -k, -(k // 2)
        while b - a > 1:
            mid = (a + b) // 2
            a, b = (a, mid) if above(Fraction(mid)) else (mid, b)
        if not below(Fraction(a)):
            return Fraction(a)
        lo_n, lo_d, hi_n, hi_d = a, 1, b, 1
    else:
        return lower
    steps = 0
    while steps < max_steps:
        steps += 1
        m = Fraction(lo_n + hi_n, lo_d + hi_d)
        if below(m):
            j = _longest_run(lambda j: below(Fraction(lo_n + j * hi_n, lo_d + j * hi_d)))
            lo_n, lo_d = lo_n + j * hi_n, lo_d + j * hi_d
        elif above(m):
            j = _longest_run(lambda j: above(Fraction(j * lo_n + hi_n, j * lo_d + hi_d)))
            hi_n, hi_d = j * lo_n + hi_n, j * lo_d + hi_d
        else:
            return m
    raise RuntimeError("no rational found within the step budget")


def _longest_run(holds) -> int:
    """Largest j >= 1 with holds(j), given holds(1) and monotonicity."""
    hi = 2
    while holds(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        lo, hi = (mid, hi) if holds(mid) else (lo, mid)
    return lo
