"""Seifert matrices, Alexander polynomials and Tristram-Levine signatures.

Every quantity is exact: unit-circle points have rational half-angle
tangent, so the Hermitian forms live over Q(i) and their signatures are
read off a congruence diagonalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import List, Sequence, Tuple

from .algebra import (
    CirclePoint,
    GaussianRational,
    IsolatingInterval,
    LaurentPolynomial,
    Polynomial,
    count_roots,
    det_bareiss,
    det_field,
    det_pencil,
    even_laurent_to_cosine,
    real_roots,
    sturm_sequence,
)
from .algebra.sturm import cauchy_bound
from .algebra.gaussian import ONE, ZERO


class InvalidSeifertMatrix(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; results cannot be trusted."""


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix S of even size with det(S - S^T) = 1."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidSeifertMatrix("Seifert matrix must be square")
        if n % 2:
            raise InvalidSeifertMatrix(f"Seifert matrix must have even size, got {n}")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        d = det_bareiss(skew)
        if d != 1:
            raise InvalidSeifertMatrix(f"det(S - S^T) = {d}, expected 1")

    @classmethod
    def empty(cls) -> "SeifertMatrix":
        return cls(())

    @classmethod
    def from_json(cls, source) -> "SeifertMatrix":
        """Load from a JSON array of integer arrays (path or text)."""
        if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("[")):
            source = Path(source).read_text()
        data = json.loads(source)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise InvalidSeifertMatrix("expected a JSON array of arrays")
        for r in data:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise InvalidSeifertMatrix(f"non-integer entry {x!r}")
        return cls(tuple(tuple(r) for r in data))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.entries])

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def transpose(self) -> List[List[int]]:
        return [list(c) for c in zip(*self.entries)] if self.entries else []

    def block(self, rows: int) -> "SeifertMatrix":
        """Upper-left principal block of the given size."""
        return SeifertMatrix(tuple(r[:rows] for r in self.entries[:rows]))

    @cached_property
    def alexander(self) -> LaurentPolynomial:
        return alexander(self)

    @cached_property
    def cosine_form(self) -> Polynomial:
        """G(c) with Delta(e^{it/2}) = G(cos t)."""
        return even_laurent_to_cosine(self.alexander)


def alexander(S: SeifertMatrix) -> LaurentPolynomial:
    """Delta(x) = det(xS - x^{-1}S^T) = x^{-2g} det(x^2 S - S^T)."""
    n = S.size
    if n == 0:
        return LaurentPolynomial({0: 1})
    st = S.transpose()
    neg_st = [[-x for x in row] for row in st]
    p = det_pencil([list(r) for r in S.entries], neg_st)  # polynomial in y = x^2
    return LaurentPolynomial({2 * k - n: a for k, a in enumerate(p.coefficients)})


def knot_determinant(S: SeifertMatrix) -> int:
    """|det(S + S^T)|, cross-checked against |Delta(i)|."""
    n = S.size
    d = abs(det_bareiss([[S.entries[i][j] + S.entries[j][i] for j in range(n)]
                         for i in range(n)]))
    at_i = S.alexander(GaussianRational(0, 1))
    if at_i.im != 0 or abs(at_i.re) != d:
        raise InconsistencyError(f"|det(S+S^T)| = {d} but Delta(i) = {at_i}")
    return d


def connected_sum(*matrices: SeifertMatrix) -> SeifertMatrix:
    """Block direct sum."""
    n = sum(m.size for m in matrices)
    rows = []
    offset = 0
    for m in matrices:
        for r in m.entries:
            rows.append((0,) * offset + r + (0,) * (n - offset - m.size))
        offset += m.size
    return SeifertMatrix(tuple(rows))


def mirror(S: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix -S^T of the reversed mirror image."""
    return SeifertMatrix(tuple(tuple(-x for x in row) for row in S.transpose()))


# Hermitian forms and their signatures

@dataclass(frozen=True)
class HermitianForm:
    entries: Tuple[Tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("Hermitian form must be square")
            for j in range(i, n):
                if rows[i][j] != rows[j][i].conjugate():
                    raise ValueError(f"not Hermitian at ({i}, {j})")

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> GaussianRational:
        return GaussianRational.coerce(det_field(self.entries))

    def congruent(self, P: Sequence[Sequence]) -> "HermitianForm":
        """P^H H P."""
        n = self.size
        P = [[GaussianRational.coerce(x) for x in row] for row in P]
        HP = [[sum((self.entries[i][k] * P[k][j] for k in range(n)), ZERO)
               for j in range(n)] for i in range(n)]
        return HermitianForm(tuple(
            tuple(sum((P[k][i].conjugate() * HP[k][j] for k in range(n)), ZERO)
                  for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class SignatureValue:
    value: Fraction
    nullity: int
    singular: bool

    def __int__(self):
        if self.value.denominator != 1:
            raise ValueError(f"signature {self.value} is not an integer")
        return int(self.value)


def hermitian_form(S: SeifertMatrix, omega: CirclePoint) -> HermitianForm:
    """(1 - w) S + (1 - conj w) S^T."""
    w = omega.value
    a, b = ONE - w, ONE - w.conjugate()
    n = S.size
    e = S.entries
    return HermitianForm(tuple(tuple(a * e[i][j] + b * e[j][i] for j in range(n))
                               for i in range(n)))


def signature_exact(H: HermitianForm) -> SignatureValue:
    """Signature and nullity by Hermitian congruence diagonalization.

    Pivots on the diagonal entry of largest absolute value. When the
    remaining diagonal is zero but some h_ij is not, the basis vector e_i
    is replaced by e_i + conj(h_ij) e_j, whose norm 2|h_ij|^2 is positive.
    """
    if not isinstance(H, HermitianForm):
        H = HermitianForm(H)
    a = [list(row) for row in H.entries]
    pos = neg = 0
    while a:
        n = len(a)
        k = max(range(n), key=lambda i: abs(a[i][i].re))
        if a[k][k].re == 0:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            c = a[i][j].conjugate()
            # column op e_i += c e_j, then the matching row op
            for r in range(n):
                a[r][i] = a[r][i] + a[r][j] * c
            cc = c.conjugate()
            for col in range(n):
                a[i][col] = a[i][col] + cc * a[j][col]
            k = i
        p = a[k][k]
        if p.im != 0 or p.re == 0:
            raise InconsistencyError("pivot is not a nonzero real number")
        if p.re > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(n) if r != k]
        inv = 1 / p.re
        row_k = a[k]
        new = []
        for r in rest:
            f = a[r][k] * inv
            if f:
                new.append([a[r][c] - f * row_k[c] for c in rest])
            else:
                new.append([a[r][c] for c in rest])
        a = new
    nullity = len(a)
    return SignatureValue(Fraction(pos - neg), nullity, nullity > 0)


# Singularities of the signature function

def circle_determinant_numerator(S: SeifertMatrix) -> Polynomial:
    """Polynomial R(u) with Delta(w(u)^{1/2}) = R(u) / (1 + u^2)^g.

    det H(w(u)) = (-4u^2 / (1 + u^2))^g * Delta(w^{1/2}), so the zeros of
    det H away from u = 0 are exactly the real roots of R.
    """
    G = S.cosine_form
    g = S.genus
    one_minus = Polynomial([1, 0, -1])
    one_plus = Polynomial([1, 0, 1])
    out = Polynomial()
    for k, a in enumerate(G.coefficients):
        if a:
            out = out + one_minus ** k * one_plus ** (g - k) * a
    return out


def hermitian_determinant_numerator(S: SeifertMatrix) -> Polynomial:
    """(-4u^2)^g R(u): numerator of det H(w(u)) over (1 + u^2)^(2g)."""
    g = S.genus
    return Polynomial([0, 0, -4]) ** g * circle_determinant_numerator(S)


def alexander_circle_singularities(S: SeifertMatrix) -> List[IsolatingInterval]:
    """Isolate the finite parameters u != 0 where H(w(u)) is singular.

    The point w = -1 (u = infinity) is handled by ``singular_at_minus_one``.
    """
    R = circle_determinant_numerator(S)
    if R.is_zero():
        raise InconsistencyError("determinant of the Hermitian form vanishes identically")
    if R(0) == 0:
        raise InconsistencyError("Delta(1) = 0 for a Seifert matrix")
    return real_roots(R)


def singular_at_minus_one(S: SeifertMatrix) -> bool:
    return S.cosine_form(Fraction(-1)) == 0


def half_angle_alexander(S: SeifertMatrix, omega: CirclePoint) -> GaussianRational:
    """Delta(w^{1/2}) computed as w^{-g} det(wS - S^T)."""
    w = omega.value
    n = S.size
    e = S.entries
    m = [[w * e[i][j] - e[j][i] for j in range(n)] for i in range(n)]
    return GaussianRational.coerce(det_field(m)) * (w ** (-S.genus))


def _signature_at(S: SeifertMatrix, u) -> SignatureValue:
    return signature_exact(hermitian_form(S, CirclePoint(u)))


def _side_sample(R: Polynomial, u0: Fraction, direction: int) -> Fraction:
    """Rational point next to u0 with no root of R in between."""
    seq = sturm_sequence(R.squarefree())
    step = Fraction(1)
    while True:
        x = u0 + direction * step
        a, b = (x, u0) if direction < 0 else (u0, x)
        # roots in (a, b]; u0 itself may be a root
        n = count_roots(seq, a, b) + (R.sign_at(a) == 0)
        expected = 1 if R.sign_at(u0) == 0 else 0
        if R.sign_at(x) != 0 and x != 0 and n == expected:
            return x
        step /= 2


def sigma(S: SeifertMatrix, omega: CirclePoint) -> SignatureValue:
    """Tristram-Levine signature, averaged over one-sided limits if singular."""
    if omega.parameter == 0:
        raise ValueError("sigma is undefined at omega = 1 (the form vanishes)")
    direct = signature_exact(hermitian_form(S, omega))
    if not direct.singular:
        return direct
    R = circle_determinant_numerator(S)
    if omega.is_infinite:
        # every finite singular parameter lies inside (-B, B)
        B = cauchy_bound(R) if R.degree > 0 else Fraction(1)
        left, right = B, -B
    else:
        u0 = omega.parameter
        left = _side_sample(R, u0, -1)
        right = _side_sample(R, u0, 1)
    s1 = _signature_at(S, left)
    s2 = _signature_at(S, right)
    if s1.singular or s2.singular:
        raise InconsistencyError("side sample of sigma is singular")
    return SignatureValue((s1.value + s2.value) / 2, direct.nullity, True)


def signature_profile(S: SeifertMatrix, width=Fraction(1, 1000)):
    """Step function of sigma over the u-line.

    Returns (breakpoints, values): breakpoints are isolating intervals of
    the parameters where sigma jumps, sorted; ``values`` has one more entry
    than ``breakpoints`` and holds the constant signature on each gap.
    Roots of the Alexander polynomial where sigma does not jump are merged
    away. A sign change at u = infinity (w = -1) cannot show up as a
    breakpoint on the u-line and is reported through the end values.
    """
    roots = [iv.refine(width) for iv in alexander_circle_singularities(S)]
    samples = []
    if not roots:
        samples = [Fraction(1)]
    else:
        samples.append(roots[0].lo - 1)
        for a, b in zip(roots, roots[1:]):
            samples.append(_gap_point(a, b))
        samples.append(roots[-1].hi + 1)
    samples = [s if s != 0 else _nonzero_near(s, roots) for s in samples]
    values = [int(_signature_at(S, s).value) for s in samples]
    keep_bp, keep_val = [], [values[0]]
    for iv, v in zip(roots, values[1:]):
        if v != keep_val[-1]:
            keep_bp.append(iv)
            keep_val.append(v)
    return keep_bp, keep_val


def _gap_point(a: IsolatingInterval, b: IsolatingInterval) -> Fraction:
    while a.hi >= b.lo:
        a, b = a.bisect(), b.bisect()
    return (a.hi + b.lo) / 2


def _nonzero_near(s, roots):
    # sigma is locally constant through u = 0; sample just beside it
    lo = max((iv.hi for iv in roots if iv.hi < 0), default=Fraction(-1))
    return lo / 2
