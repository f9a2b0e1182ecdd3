"""The knots K_n and exact certificates for their signature behaviour.

K_n is given by a 14x14 Seifert matrix whose upper-left 12x12 block M is
a Seifert matrix of K_0 = T(3,7). The helpers here rebuild the function
g(t) = Delta_{K_1}(e^{it/2}) / Delta_{K_0}(e^{it/2}) as a rational function
of c = cos t, locate the points t_l with g(t_l) = 1 - 1/l near t = pi, pick
rational circle points between consecutive t_l, and check the resulting
signature pattern cell by cell.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    CirclePoint,
    IsolatingInterval,
    LaurentPolynomial,
    Polynomial,
    cosine_series_to_polynomial,
    even_laurent_to_cosine,
    simplest_rational_between,
    sturm_isolate,
)
from .seifert import (
    InconsistencyError,
    SeifertMatrix,
    connected_sum,
    hermitian_form,
    mirror,
    signature_exact,
)

# Rows of the 14x14 Seifert matrix of K_n with the n-dependent block zeroed.
_BASE_ROWS = (
    (-1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1),
    (1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0),
    (0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0),
    (0,) * 14,
    (0,) * 14,
)

# Published Alexander polynomials, exponent -> coefficient.
PRINTED_DELTA_K0 = {12: 1, 10: -1, 6: 1, 4: -1, 0: 1, -4: -1, -6: 1, -10: -1, -12: 1}
PRINTED_DELTA_K1 = {12: 2, 10: -3, 8: 1, 6: 2, 4: -3, 2: 1, 0: 1,
                    -2: 1, -4: -3, -6: 2, -8: 1, -10: -3, -12: 2}

# Published g(t) as cosine series, k -> coefficient of cos(k t).
PRINTED_G_NUMERATOR = {6: 4, 5: -6, 4: 2, 3: 4, 2: -6, 1: 2, 0: 1}
PRINTED_G_DENOMINATOR = {6: 2, 5: -2, 3: 2, 2: -2, 0: 1}


@lru_cache(maxsize=None)
def seifert_kn(n: int) -> SeifertMatrix:
    if n < 0:
        raise ValueError("n must be nonnegative")
    rows = [list(r) for r in _BASE_ROWS]
    rows[12][12], rows[12][13] = -n, n
    rows[13][12], rows[13][13] = n + 1, -n - 1
    return SeifertMatrix(tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def seifert_k0_form() -> SeifertMatrix:
    """The 12x12 block M, a Seifert matrix of T(3,7)."""
    return seifert_kn(0).block(12)


def printed_delta(n: int) -> LaurentPolynomial:
    if n == 0:
        return LaurentPolynomial(PRINTED_DELTA_K0)
    if n == 1:
        return LaurentPolynomial(PRINTED_DELTA_K1)
    raise ValueError("only Delta_{K_0} and Delta_{K_1} are printed")


@dataclass(frozen=True)
class SkeinReport:
    ok: bool
    checked: int
    first_failure: Optional[int] = None


def skein_check(n_max: int) -> SkeinReport:
    """Check Delta_{K_n} = Delta_{K_0} + n (Delta_{K_1} - Delta_{K_0})."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    d0 = seifert_kn(0).alexander
    step = seifert_kn(1).alexander - d0
    for n in range(n_max + 1):
        if seifert_kn(n).alexander != d0 + step * n:
            return SkeinReport(False, n, n)
    return SkeinReport(True, n_max + 1)


# g(t) as a rational function of c = cos t

@lru_cache(maxsize=None)
def g_as_polynomial() -> Tuple[Polynomial, Polynomial]:
    """(G_num, G_den) with g(t) = G_num(cos t) / G_den(cos t).

    Built from the computed Alexander polynomials and checked against the
    published trigonometric form through its Chebyshev expansion.
    """
    num = even_laurent_to_cosine(seifert_kn(1).alexander)
    den = even_laurent_to_cosine(seifert_kn(0).alexander)
    if (num != cosine_series_to_polynomial(PRINTED_G_NUMERATOR)
            or den != cosine_series_to_polynomial(PRINTED_G_DENOMINATOR)):
        raise InconsistencyError("g(t) does not match its published trigonometric form")
    return num, den


def g_derivative_numerator() -> Polynomial:
    """N'D - ND', the numerator of dG/dc."""
    num, den = g_as_polynomial()
    return num.derivative() * den - num * den.derivative()


def F(omega: CirclePoint, n: int) -> Fraction:
    """2(Re w - 1)(1 - n + n Delta_{K_1}(w^{1/2}) / Delta_{K_0}(w^{1/2}))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if omega.parameter == 0:
        raise ValueError("F is undefined at omega = 1")
    num, den = g_as_polynomial()
    c = omega.cosine
    d0 = den(c)
    if d0 == 0:
        raise ValueError("Delta_{K_0} vanishes at omega^(1/2)")
    return 2 * (c - 1) * (1 - n + n * num(c) / d0)


def sign(x) -> int:
    return (x > 0) - (x < 0)


# The omega sequence

@dataclass(frozen=True)
class OmegaEntry:
    l: int
    t_interval: IsolatingInterval  # root c_l = cos t_l of G_num - (1 - 1/l) G_den
    point: CirclePoint             # omega_l, with cos s_l strictly in (c_l, c_{l-1})


@dataclass(frozen=True)
class OmegaSequence:
    """Points omega_l -> -1 at which the K_n signatures jump one index at a time.

    ``window_edge`` isolates c* = cos(pi - eps): on [-1, c*) G is finite
    and strictly decreasing, i.e. g increases on [pi - eps, pi].
    """

    l0: int
    window_edge: IsolatingInterval
    entries: Dict[int, OmegaEntry] = field(default_factory=dict)

    @property
    def l_max(self) -> int:
        return max(self.entries)

    def omega(self, l: int) -> CirclePoint:
        return self.entries[l].point

    @property
    def epsilon(self) -> float:
        """Approximate eps, for display."""
        import math
        c = self.window_edge.refine(Fraction(1, 10**12)).midpoint
        return math.pi - math.acos(float(c))

    @property
    def epsilon_window(self) -> Tuple[Fraction, None]:
        """Rational u0 such that every u >= u0 lies in the window (u = inf is pi)."""
        iv = self.window_edge.refine(Fraction(1, 10**6))
        c = iv.hi  # the angle window in u starts past the image of c*
        u2 = (1 - c) / (1 + c)
        u = simplest_rational_between(lambda x: x <= 0 or x * x <= u2, lambda x: False)
        return u, None


def _window_edge() -> IsolatingInterval:
    num, den = g_as_polynomial()
    dn = g_derivative_numerator()
    if dn.sign_at(-1) == 0:
        raise InconsistencyError("dG/dc vanishes at c = -1")
    candidates = []
    for p in (dn, den):
        roots = [iv for iv in sturm_isolate(p, -1, 1) if iv.compare_rational(-1) > 0]
        if roots:
            candidates.append(roots[0])
    if not candidates:
        raise InconsistencyError("no finite monotonicity window edge")
    edge = candidates[0]
    for iv in candidates[1:]:
        if iv.compare(edge) < 0:
            edge = iv
    return edge


def _attained(level: Fraction, edge: IsolatingInterval) -> bool:
    """Whether G takes the value ``level`` strictly inside (-1, c*)."""
    num, den = g_as_polynomial()
    s_den = edge.sign_of(den)
    if s_den == 0:
        return True  # G is unbounded at a pole, every level below 1 is hit
    s = edge.sign_of(num - den * level)
    return s != 0 and s != s_den  # G(c*) < level


def _t_root(level: Fraction, edge: IsolatingInterval) -> IsolatingInterval:
    num, den = g_as_polynomial()
    p = num - den * level
    roots = [iv for iv in sturm_isolate(p, -1, 1)
             if iv.compare_rational(-1) > 0 and iv.compare(edge) < 0]
    if len(roots) != 1:
        raise InconsistencyError(f"expected one root of G = {level} in the window, got {len(roots)}")
    return roots[0]


def _circle_point_between(lower: IsolatingInterval, upper: IsolatingInterval) -> CirclePoint:
    """Simplest u > 0 whose cosine lies strictly between two algebraic roots.

    The cosine (1 - u^2)/(1 + u^2) decreases in u, so u runs from the
    upper root to the lower one.
    """
    def cos_of(u):
        return (1 - u * u) / (1 + u * u)

    def below(u):  # still at or past the upper root
        return u <= 0 or upper.compare_rational(cos_of(u)) <= 0

    def above(u):  # at or past the lower root
        return u > 0 and lower.compare_rational(cos_of(u)) >= 0

    return CirclePoint(simplest_rational_between(below, above))


@lru_cache(maxsize=None)
def compute_l0() -> Tuple[int, IsolatingInterval]:
    """Least l >= 1 such that every level 1 - 1/m, m > l, is hit in the window."""
    edge = _window_edge()
    l0 = 1
    while not _attained(1 - Fraction(1, l0 + 1), edge):
        l0 += 1
        if l0 > 10**6:
            raise InconsistencyError("monotonicity window image is empty")
    return l0, edge


def build_omega_sequence(l_max: int) -> OmegaSequence:
    """Window, l0, t_l and omega_l for l0 < l <= l_max."""
    num, den = g_as_polynomial()
    l0, edge = compute_l0()
    if l_max <= l0:
        raise ValueError(f"l_max must exceed l0 = {l0}")
    entries = {}
    prev = edge  # stands in for t_{l0}: the window edge pi - eps
    for l in range(l0 + 1, l_max + 1):
        t = _t_root(1 - Fraction(1, l), edge)
        if t.compare(prev) >= 0:
            raise InconsistencyError("t-roots are not monotone")
        point = _circle_point_between(t, prev)
        if den(point.cosine) == 0:
            raise InconsistencyError(f"Delta_K0 vanishes at omega_{l}")
        entries[l] = OmegaEntry(l, t, point)
        prev = t
    return OmegaSequence(l0, edge, entries)


def certify_entry(seq: OmegaSequence, l: int, width=None) -> bool:
    """Re-check t_{l-1} < s_l < t_l against intervals refined to ``width``."""
    e = seq.entries[l]
    upper = seq.entries[l - 1].t_interval if l - 1 in seq.entries else seq.window_edge
    lower = e.t_interval
    if width is not None:
        upper, lower = upper.refine(width), lower.refine(width)
    c = e.point.cosine
    return lower.compare_rational(c) < 0 < upper.compare_rational(c)


# Signatures on the sequence

@lru_cache(maxsize=None)
def sigma_kn(n: int, u: Optional[Fraction]) -> int:
    """Exact signature of K_n at the nonsingular point w(u); n = -1 means M."""
    S = seifert_k0_form() if n < 0 else seifert_kn(n)
    sv = signature_exact(hermitian_form(S, CirclePoint(u)))
    if sv.singular:
        raise InconsistencyError(f"form of K_{n} singular at u = {u}")
    return int(sv.value)


@dataclass(frozen=True)
class GridCell:
    l: int
    m: int
    F_sign: int
    sigma_diff: int

    def as_dict(self):
        return {"l": self.l, "m": self.m, "F_sign": self.F_sign, "sigma_diff": self.sigma_diff}


class DichotomyViolation(InconsistencyError):
    pass


def _cell(args) -> GridCell:
    l, m, u = args
    w = CirclePoint(u)
    f = F(w, m)
    if f == 0:
        raise DichotomyViolation(f"F vanishes at (l, m) = ({l}, {m})")
    diff = sigma_kn(m, u) - sigma_kn(-1, u)
    return GridCell(l, m, sign(f), diff)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("CONCORDANCE_WORKERS", "1")))
    except ValueError:
        return 1


def lemma_dichotomy_grid(seq: OmegaSequence, l_range: Iterable[int],
                         m_range: Iterable[int]) -> List[GridCell]:
    """Signature differences sigma_{w_l}(K_m) - sigma_{w_l}(K_0) with checks.

    Each cell must have difference 0 when F < 0 and +-2 when F > 0, F must
    be positive exactly when m >= l, and the +-2 sign must depend on m only.
    """
    l_range, m_range = list(l_range), list(m_range)
    for l in l_range:
        if l not in seq.entries:
            raise ValueError(f"omega_{l} is not in the sequence")
    for m in m_range:
        if m <= seq.l0:
            raise ValueError(f"m = {m} must exceed l0 = {seq.l0}")
    jobs = [(l, m, seq.omega(l).parameter) for l in l_range for m in m_range]
    workers = _workers()
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            cells = list(ex.map(_cell, jobs))
    else:
        cells = [_cell(j) for j in jobs]
    jump_sign: Dict[int, int] = {}
    for c in cells:
        expected_F = 1 if c.m >= c.l else -1
        if c.F_sign != expected_F:
            raise DichotomyViolation(f"F sign {c.F_sign} at (l, m) = ({c.l}, {c.m})")
        if c.F_sign < 0 and c.sigma_diff != 0:
            raise DichotomyViolation(f"expected equal signatures at {c}")
        if c.F_sign > 0:
            if abs(c.sigma_diff) != 2:
                raise DichotomyViolation(f"expected a jump of 2 at {c}")
            s = jump_sign.setdefault(c.m, c.sigma_diff)
            if s != c.sigma_diff:
                raise DichotomyViolation(f"jump sign not constant for m = {c.m}")
    return cells


# Combinations of K_n

@dataclass(frozen=True)
class KnotCombo:
    """Integer combination sum a_i K_{n_i} in the concordance group."""

    terms: Tuple[Tuple[int, int], ...]  # (coefficient, n), merged and sorted by n

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for a, n in self.terms:
            if n < 0:
                raise ValueError("knot index must be nonnegative")
            merged[n] = merged.get(n, 0) + int(a)
        object.__setattr__(self, "terms",
                           tuple((a, n) for n, a in sorted(merged.items()) if a))

    @classmethod
    def parse(cls, spec: str) -> "KnotCombo":
        """Parse e.g. ``"2K5 - 2K7"``, ``"J6 + J5"``; J_n means K_n - K_0."""
        s = spec.replace(" ", "")
        if not s:
            return cls(())
        pos = 0
        terms = []
        pattern = re.compile(r"([+-]?)(\d*)\*?([KJ])(\d+)")
        while pos < len(s):
            mt = pattern.match(s, pos)
            if not mt or (pos > 0 and not mt.group(1)):
                raise ValueError(f"cannot parse knot combination at {s[pos:]!r}")
            sgn = -1 if mt.group(1) == "-" else 1
            a = sgn * int(mt.group(2) or 1)
            n = int(mt.group(4))
            if mt.group(3) == "K":
                terms.append((a, n))
            else:
                terms += [(a, n), (-a, 0)]
            pos = mt.end()
        return cls(tuple(terms))

    @classmethod
    def J(cls, n: int, coefficient: int = 1) -> "KnotCombo":
        return cls(((coefficient, n), (-coefficient, 0)))

    def __add__(self, other: "KnotCombo") -> "KnotCombo":
        return KnotCombo(self.terms + other.terms)

    def __neg__(self):
        return KnotCombo(tuple((-a, n) for a, n in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.terms

    def seifert(self) -> SeifertMatrix:
        """Realize the combination by connected sums and mirrors."""
        blocks = []
        for a, n in self.terms:
            S = seifert_kn(n)
            blocks += [S if a > 0 else mirror(S)] * abs(a)
        return connected_sum(*blocks)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{a}K{n}" for a, n in self.terms).replace("+ -", "- ")


def combo_sigma(combo: KnotCombo, omega: CirclePoint) -> int:
    """sigma_w of the combination via additivity over its summands."""
    total = 0
    for a, n in combo.terms:
        total += a * sigma_kn(n, omega.parameter)
    return total


def sigma_bar(combo: KnotCombo, seq: OmegaSequence, k: int) -> List[int]:
    """(sigma_{w_{l0+1}}/2, ..., sigma_{w_{l0+k}}/2) of the combination."""
    out = []
    for j in range(1, k + 1):
        l = seq.l0 + j
        if l not in seq.entries:
            raise ValueError(f"omega_{l} is not in the sequence (l_max = {seq.l_max})")
        w = seq.omega(l)
        num, den = g_as_polynomial()
        c = w.cosine
        for a, n in combo.terms:
            S = seifert_kn(n)
            if S.cosine_form(c) == 0:
                raise ValueError(f"omega_{l} (index {j}) is singular for K_{n}")
        s = combo_sigma(combo, w)
        if s % 2:
            raise InconsistencyError("odd signature")
        out.append(s // 2)
    return out


@dataclass(frozen=True)
class IndependenceWitness:
    l: int
    omega: CirclePoint
    sigma: int
    route: str  # "sum" when sum of coefficients != 0, else "top"


def independence_certificate(combo: KnotCombo, seq: OmegaSequence) -> IndependenceWitness:
    """A point omega_l where the combination has nonzero signature.

    Follows the slice-obstruction argument: past the largest index the
    signature is sigma(K_0) times the coefficient sum; if that sum is zero,
    the largest index itself carries a jump of 2 times its coefficient.
    """
    if combo.is_zero():
        raise ValueError("the combination is zero")
    for a, n in combo.terms:
        if n <= seq.l0:
            raise ValueError(f"index {n} must exceed l0 = {seq.l0}")
        if n not in seq.entries:
            raise ValueError(f"index {n} exceeds the sequence (l_max = {seq.l_max})")
    top = combo.terms[-1][1]
    total = sum(a for a, _ in combo.terms)
    if total:
        for h in range(top + 1, seq.l_max + 1):
            if sigma_kn(0, seq.omega(h).parameter) != 0:
                w = seq.omega(h)
                s = combo_sigma(combo, w)
                if s == 0:
                    raise InconsistencyError(f"sigma vanishes at omega_{h} despite nonzero sum")
                return IndependenceWitness(h, w, s, "sum")
        raise ValueError("no omega_h past the top index with sigma(K_0) != 0; extend the sequence")
    w = seq.omega(top)
    s = combo_sigma(combo, w)
    if s == 0:
        raise InconsistencyError(f"sigma vanishes at omega_{top} for a zero-sum combination")
    return IndependenceWitness(top, w, s, "top")
