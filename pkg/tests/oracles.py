"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
from functools import lru_cache


@lru_cache(maxsize=None)
def _box_shell(N, half_width, norm):
    box = range(-half_width, half_width + 1)
    allv = np.array(list(itertools.product(box, repeat=N)), dtype=np.int64).reshape(-1, N)
    return allv[(allv * allv).sum(axis=1) == norm]


def brute_force_embeddable(gram, N, sign, coord_bound=None) -> bool:
    """Exists an injective form-preserving map of ``gram`` into (Z^N, sign*I)?

    Plain enumeration of every tuple of candidate vectors; no symmetry
    breaking, no ordering heuristics. Injectivity holds exactly when the
    realized Gram matrix (= gram) is nonsingular.
    """
    r = len(gram)
    if r == 0:
        return True
    bound = coord_bound if coord_bound is not None else max(abs(gram[i][i]) for i in range(r))
    half = int(bound ** 0.5) + 1
    shells = [_box_shell(N, half, sign * gram[i][i]) for i in range(r)]
    if any(len(s) == 0 for s in shells):
        return False
    if _det(gram) == 0:
        return False
    if r == 1:
        return True
    match = {}
    for i in range(r):
        for j in range(i + 1, r):
            match[i, j] = (shells[i] @ shells[j].T) == sign * gram[i][j]
    if r == 2:
        return bool(match[0, 1].any())
    if r == 3:
        paths = match[0, 1].astype(np.int64) @ match[1, 2].astype(np.int64)
        return bool(((paths > 0) & match[0, 2]).any())
    for tup in itertools.product(*(range(len(s)) for s in shells)):
        if all(match[i, j][tup[i], tup[j]] for (i, j) in match):
            return True
    return False


def _det(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return d


def all_small_grams(rank, bound=4):
    """Every symmetric integer matrix of the given rank with |entries| <= bound."""
    vals = range(-bound, bound + 1)
    idx = [(i, j) for i in range(rank) for j in range(i, rank)]
    for entries in itertools.product(vals, repeat=len(idx)):
        g = [[0] * rank for _ in range(rank)]
        for (i, j), v in zip(idx, entries):
            g[i][j] = g[j][i] = v
        yield tuple(tuple(r) for r in g)


def charpoly_faddeev(m):
    """Characteristic polynomial det(xI - A), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    A = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        AM = [[sum(A[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        Mk = [[AM[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        AMk = [[sum(A[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(AMk[i][i] for i in range(n)) / k)
    return coeffs


def descartes_signature(sym):
    """Signature of a real symmetric matrix from its characteristic polynomial.

    All roots are real, so Descartes' rule counts positive roots exactly.
    """
    c = charpoly_faddeev(sym)

    def variations(seq):
        s = [x for x in seq if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    n = len(c) - 1
    pos = variations(c)
    neg = variations([a * (-1) ** (n - i) for i, a in enumerate(c)])
    return pos - neg


def random_unimodular(rng, n, steps=None):
    """Product of random elementary integer row operations (det = +-1)."""
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-1, 1])
        P[i] = [a + c * b for a, b in zip(P[i], P[j])]
    if n and rng.random() < 0.5:
        P[0] = [-a for a in P[0]]
    return P


def random_seifert_entries(rng, genus, spread=2):
    """P^T S P for S a block sum of [[a, b], [b - 1, c]] and unimodular P."""
    n = 2 * genus
    S = [[0] * n for _ in range(n)]
    for k in range(genus):
        a, b, c = (rng.randint(-spread, spread) for _ in range(3))
        S[2 * k][2 * k], S[2 * k][2 * k + 1] = a, b
        S[2 * k + 1][2 * k], S[2 * k + 1][2 * k + 1] = b - 1, c
    P = random_unimodular(rng, n)
    PT = [list(r) for r in zip(*P)]
    mul = lambda A, B: [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))]
                        for i in range(len(A))]
    return tuple(tuple(r) for r in mul(mul(PT, S), P))
