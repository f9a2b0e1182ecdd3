"""Integral lattices and exhaustive embedding search into (Z^N, +-I)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra import det_bareiss, integer_kernel, matrix_rank


@dataclass(frozen=True)
class IntegralLattice:
    """Z^rank with a symmetric integer Gram matrix."""

    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        for i in range(n):
            if len(g[i]) != n:
                raise ValueError("Gram matrix must be square")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_json(cls, source) -> "IntegralLattice":
        if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("[")):
            source = Path(source).read_text()
        data = json.loads(source)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("expected a JSON array of arrays")
        for r in data:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise ValueError(f"non-integer entry {x!r}")
        return cls(tuple(tuple(r) for r in data))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntegralLattice":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, n: int, sign: int = 1) -> "IntegralLattice":
        return cls.diagonal([sign] * n)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def determinant(self) -> int:
        return det_bareiss(self.gram)

    def congruent(self, P: Sequence[Sequence[int]]) -> "IntegralLattice":
        """Gram matrix P^T G P in the basis given by the columns of P."""
        G = np.array(self.gram, dtype=object).reshape(self.rank, self.rank)
        P = np.array(P, dtype=object).reshape(self.rank, -1)
        return IntegralLattice(tuple(tuple(int(x) for x in row) for row in P.T.dot(G).dot(P)))


def is_definite(L: IntegralLattice, sign: int) -> bool:
    """Sylvester's criterion on the leading principal minors.

    A definite form has every principal minor nonzero, so a vanishing
    leading minor already rules definiteness out.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    g = L.gram
    for k in range(1, L.rank + 1):
        d = det_bareiss([row[:k] for row in g[:k]])
        if d == 0 or (d > 0) != (sign ** k > 0):
            return False
    return True


def direct_sum(*lattices: IntegralLattice) -> IntegralLattice:
    n = sum(L.rank for L in lattices)
    rows, off = [], 0
    for L in lattices:
        for r in L.gram:
            rows.append((0,) * off + r + (0,) * (n - off - L.rank))
        off += L.rank
    return IntegralLattice(tuple(rows))


# Embedding search

@dataclass(frozen=True)
class EmbeddingWitness:
    """Images of the basis vectors in Z^N; sign * (v_i . v_j) = gram[i][j]."""

    vectors: Tuple[Tuple[int, ...], ...]
    sign: int
    ambient: int

    def to_json(self):
        return [list(v) for v in self.vectors]

    def verify(self, L: IntegralLattice) -> bool:
        v = self.vectors
        if len(v) != L.rank or any(len(x) != self.ambient for x in v):
            return False
        for i in range(L.rank):
            for j in range(L.rank):
                if self.sign * sum(a * b for a, b in zip(v[i], v[j])) != L.gram[i][j]:
                    return False
        return matrix_rank(v) == L.rank


@dataclass(frozen=True)
class NotEmbeddable:
    reason: str

    def __bool__(self):
        return False


@lru_cache(maxsize=None)
def norm_shell(n: int, norm: int) -> np.ndarray:
    """All v in Z^n with v . v = norm, in lexicographic order."""
    out: List[Tuple[int, ...]] = []

    def rec(prefix, left, dims):
        if dims == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        r = isqrt(left)
        for x in range(-r, r + 1):
            rec(prefix + [x], left - x * x, dims - 1)

    rec([], norm, n)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def _canonical_mask(shell: np.ndarray, placed: np.ndarray) -> np.ndarray:
    """Candidates in canonical form under the symmetries fixing ``placed``.

    Coordinates with identical columns in ``placed`` may be permuted, and
    coordinates with zero columns may also change sign, without moving any
    placed vector. Entries on each class must be non-increasing, and on
    the zero class nonnegative.
    """
    ok = np.ones(len(shell), dtype=bool)
    classes: Dict[Tuple[int, ...], List[int]] = {}
    for j in range(shell.shape[1]):
        classes.setdefault(tuple(placed[:, j].tolist()), []).append(j)
    for col, idx in classes.items():
        sub = shell[:, idx]
        if len(idx) > 1:
            ok &= (sub[:, :-1] >= sub[:, 1:]).all(axis=1)
        if not any(col):
            ok &= (sub >= 0).all(axis=1)
    return ok


def embed(L: IntegralLattice, N: int, sign: int) -> Union[EmbeddingWitness, NotEmbeddable]:
    """Search for an embedding of L into (Z^N, sign * I).

    The search is complete: basis vectors are placed in order of decreasing
    norm, each drawn from the finite shell of vectors of the right norm and
    filtered by the inner products already fixed. Each new vector is taken
    up to the signed coordinate permutations that fix the vectors already
    placed; these are automorphisms of the target, so ``NotEmbeddable``
    means no embedding exists.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if N < L.rank:
        raise ValueError(f"ambient rank {N} < lattice rank {L.rank}: no injective map")
    if L.rank == 0:
        return EmbeddingWitness((), sign, N)
    if not is_definite(L, sign):
        return NotEmbeddable("lattice is not " + ("positive" if sign > 0 else "negative") + " definite")
    g = L.gram
    order = sorted(range(L.rank), key=lambda b: (-abs(g[b][b]), b))
    shells = [norm_shell(N, sign * g[b][b]) for b in order]
    if any(len(s) == 0 for s in shells):
        return NotEmbeddable("some basis norm is not a sum of N squares")
    # target inner products, in search order
    targets = [[sign * g[order[i]][order[j]] for j in range(i)] for i in range(L.rank)]
    placed = np.zeros((L.rank, N), dtype=np.int64)

    def candidates(k: int) -> np.ndarray:
        s = shells[k]
        ok = _canonical_mask(s, placed[:k])
        if k:
            ok &= ((s @ placed[:k].T) == np.array(targets[k], dtype=np.int64)).all(axis=1)
        return s[ok]

    def search(k: int) -> bool:
        if k == L.rank:
            return True
        for v in candidates(k):
            placed[k] = v
            if search(k + 1):
                return True
        return False

    if not search(0):
        return NotEmbeddable("search exhausted")
    vectors = [None] * L.rank
    for pos, b in enumerate(order):
        vectors[b] = tuple(int(x) for x in placed[pos])
    w = EmbeddingWitness(tuple(vectors), sign, N)
    if not w.verify(L):
        raise RuntimeError("embedding search returned an invalid witness")
    return w


def is_standard(L: IntegralLattice) -> bool:
    """Whether L is isomorphic to (Z^n, +-I).

    A definite unimodular lattice embeds in the standard lattice of its own
    rank exactly when it is standard.
    """
    if L.rank == 0:
        return True
    if abs(L.determinant()) != 1:
        return False
    for sign in (1, -1):
        if is_definite(L, sign):
            return bool(embed(L, L.rank, sign))
    return False


def orthogonal_complement(w: EmbeddingWitness, N: Optional[int] = None) -> IntegralLattice:
    """Gram matrix of {v in Z^N : v . w_i = 0 for all i} on an integral basis."""
    N = w.ambient if N is None else N
    basis = integer_kernel(w.vectors, N)
    return IntegralLattice(tuple(tuple(w.sign * sum(a * b for a, b in zip(x, y)) for y in basis)
                                 for x in basis))
