"""Lens spaces: continued fractions, plumbing lattices and the same-rank
embedding test on a lattice and its dual.

Run with:  python demos/04_lens_space_obstructions.py
"""

from concordance.lens import LensSum, cf_expand, dual, h1_order, obstruct, plumbing_lattice

for p, q in [(3, 1), (7, 2), (7, 5), (19, 7)]:
    print("p/q = %d/%d -> %s" % (p, q, cf_expand(p, q)))

s = LensSum.parse("L(7,2) # L(3,1)")
print("\n%s" % s)
print("  lattice:", plumbing_lattice(s).gram)
print("  |H_1|  :", h1_order(s))
print("  dual   :", dual(s))

# Obstructed means a lattice or its dual has no embedding of the same rank,
# which rules out bounding a rational homology ball. HypothesisHolds is
# inconclusive.
for text in ["L(2,1)", "L(3,1)", "L(4,1)", "L(9,2)", "L(25,7)", "L(3,1) # L(3,2)", "L(5,1) # L(5,4)"]:
    v = obstruct(LensSum.parse(text))
    detail = v.failed_sides if v.status == "Obstructed" else v.witness.to_json()
    print("%-18s %-16s %s" % (text, v.status, detail))
