"""Embedding definite lattices into the standard diagonal lattice.

Run with:  python demos/03_lattice_embeddings.py
"""

import random

import numpy as np

from concordance.lattice import (
    IntegralLattice,
    direct_sum,
    embed,
    is_standard,
    orthogonal_complement,
)

a3 = IntegralLattice(((-2, 1, 0), (1, -2, 1), (0, 1, -2)))
w = embed(a3, 3, -1)
print("A3 (negative) into -Z^3:", w.to_json())
print("complement in -Z^3 :", orthogonal_complement(w).gram)
w5 = embed(a3, 5, -1)
print("complement in -Z^5 :", orthogonal_complement(w5).gram)

print("\n-3 into -Z^1:", embed(IntegralLattice.diagonal([-3]), 1, -1))
print("-3 into -Z^3:", embed(IntegralLattice.diagonal([-3]), 3, -1).to_json())

e8 = IntegralLattice((
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
))
print("\nE8: det %d, standard: %s" % (e8.determinant(), is_standard(e8)))

# Z^6 in a scrambled basis is still standard, and the search recovers it.
rng = random.Random(0)
P = np.eye(6, dtype=int)
for _ in range(20):
    i, j = rng.sample(range(6), 2)
    P[i] += rng.choice((-1, 1)) * P[j]
L = IntegralLattice.identity(6).congruent(P.tolist())
print("\nscrambled Z^6 gram:")
print(np.array(L.gram))
print("standard:", is_standard(L))
print("witness :", embed(L, 6, 1).to_json())

print("\nA3 + (-4) into -Z^4:", embed(direct_sum(a3, IntegralLattice.diagonal([-4])), 4, -1).to_json())
