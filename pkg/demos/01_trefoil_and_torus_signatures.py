"""Alexander polynomials and circle signatures, starting from the trefoil.

Run with:  python demos/01_trefoil_and_torus_signatures.py
"""

from fractions import Fraction

from concordance.algebra import CirclePoint
from concordance.knfamily import seifert_k0_form
from concordance.seifert import (
    SeifertMatrix,
    alexander,
    connected_sum,
    hermitian_form,
    knot_determinant,
    mirror,
    sigma,
    signature_profile,
)

# A Seifert matrix of the left-handed trefoil.
trefoil = SeifertMatrix(((-1, 1), (0, -1)))
print("Delta(x) =", alexander(trefoil))
print("det      =", knot_determinant(trefoil))

# Circle points are given by u = tan(theta / 2); u = 1 is omega = i, "inf" is -1.
w = CirclePoint(Fraction(1))
print("\nomega =", w.value)
for row in hermitian_form(trefoil, w).entries:
    print("   ", [str(x) for x in row])

# The signature is a step function of u. It jumps at the roots of Delta on the
# circle, here u = +-1/sqrt(3), i.e. omega = exp(+-i pi/3).
bps, values = signature_profile(trefoil, Fraction(1, 1000))
print("\nsignature profile of the trefoil")
print("  breakpoints:", [(str(b.lo), str(b.hi)) for b in bps])
print("  values     :", values)

# Sums and mirrors behave as expected.
double = connected_sum(trefoil, trefoil)
print("\nsigma(T # T, -1) =", sigma(double, CirclePoint.minus_one()).value)
print("sigma(-T, -1)    =", sigma(mirror(trefoil), CirclePoint.minus_one()).value)

# The 12x12 form of T(3,7) has twelve roots of Delta on the circle.
m = seifert_k0_form()
bps, values = signature_profile(m, Fraction(1, 1000))
print("\nT(3,7): %d breakpoints" % len(bps))
print("  values:", values)
print("  classical signature:", sigma(m, CirclePoint.minus_one()).value)
