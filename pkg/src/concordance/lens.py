"""Lens spaces, their plumbing lattices and the Donaldson-type obstruction."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import List, Optional, Sequence, Tuple

from .lattice import EmbeddingWitness, IntegralLattice, direct_sum, embed


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if not (self.p > self.q > 0):
            raise ValueError(f"L({self.p},{self.q}): need p > q > 0")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}): p and q must be coprime")

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class LensSum:
    summands: Tuple[LensSpace, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("a lens sum needs at least one summand")

    @classmethod
    def of(cls, *pairs: Tuple[int, int]) -> "LensSum":
        return cls(tuple(LensSpace(p, q) for p, q in pairs))

    @classmethod
    def parse(cls, text: str) -> "LensSum":
        """Parse ``L(p,q) # L(p,q) # ...``."""
        parts = text.split("#")
        out = []
        for part in parts:
            m = re.fullmatch(r"\s*L\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", part)
            if not m:
                raise ValueError(f"cannot parse lens space {part.strip()!r}")
            out.append(LensSpace(int(m.group(1)), int(m.group(2))))
        return cls(tuple(out))

    def __str__(self):
        return " # ".join(map(str, self.summands))


def cf_expand(p: int, q: int) -> List[int]:
    """[a_1, ..., a_n] with a_i >= 2 and a_1 - 1/(a_2 - 1/(...)) = p/q."""
    if not (p > q > 0) or gcd(p, q) != 1:
        raise ValueError(f"need coprime p > q > 0, got ({p}, {q})")
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def cf_evaluate(a: Sequence[int]) -> Fraction:
    if not a:
        raise ValueError("empty continued fraction")
    x = Fraction(a[-1])
    for pos in range(len(a) - 2, -1, -1):
        if x == 0:
            raise ZeroDivisionError(f"tail starting at position {pos + 1} evaluates to 0")
        x = a[pos] - 1 / x
    return x


def chain_lattice(a: Sequence[int]) -> IntegralLattice:
    n = len(a)
    return IntegralLattice(tuple(
        tuple(-a[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)))


def plumbing_lattice(s: LensSum) -> IntegralLattice:
    """Negative definite lattice of the canonical plumbing of the sum."""
    return direct_sum(*(chain_lattice(cf_expand(L.p, L.q)) for L in s.summands))


def dual(s: LensSum) -> LensSum:
    """-L(p,q) = L(p, p-q), summand by summand."""
    return LensSum(tuple(LensSpace(L.p, L.p - L.q) for L in s.summands))


def h1_order(s: LensSum) -> int:
    n = prod(L.p for L in s.summands)
    d = abs(plumbing_lattice(s).determinant())
    if d != n:
        raise RuntimeError(f"|det| of the plumbing lattice is {d}, expected {n}")
    return n


@dataclass(frozen=True)
class ObstructionVerdict:
    """Outcome of the same-rank embedding tests for a lattice and its dual.

    ``Obstructed`` is a proof that the sum is not rationally homology
    cobordant to any integral homology sphere (hence bounds no rational
    ball). ``HypothesisHolds`` is inconclusive by itself.
    """

    status: str                      # "Obstructed" or "HypothesisHolds"
    rank: int
    dual_rank: int
    failed_sides: Tuple[str, ...] = ()
    witness: Optional[EmbeddingWitness] = None
    dual_witness: Optional[EmbeddingWitness] = None

    @property
    def failed_side(self) -> Optional[str]:
        return self.failed_sides[0] if self.failed_sides else None

    def to_json(self) -> dict:
        out = {"status": self.status, "rank": self.rank, "dual_rank": self.dual_rank}
        if self.status == "Obstructed":
            out["failed_side"] = self.failed_side
            out["failed_sides"] = list(self.failed_sides)
        else:
            out["witnesses"] = {"primary": self.witness.to_json(),
                                "dual": self.dual_witness.to_json()}
        return out


def obstruct(s: LensSum) -> ObstructionVerdict:
    L, Ld = plumbing_lattice(s), plumbing_lattice(dual(s))
    w = embed(L, L.rank, -1)
    wd = embed(Ld, Ld.rank, -1)
    failed = tuple(side for side, r in (("primary", w), ("dual", wd)) if not r)
    if failed:
        return ObstructionVerdict("Obstructed", L.rank, Ld.rank, failed)
    return ObstructionVerdict("HypothesisHolds", L.rank, Ld.rank, (), w, wd)
