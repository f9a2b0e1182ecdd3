"""The knots K_n: skein check, the function g, the omega sequence and the
signature jumps that make the J_n = K_n - K_0 independent.

Run with:  python demos/02_kn_family_certificates.py
"""

from concordance.knfamily import (
    F,
    KnotCombo,
    build_omega_sequence,
    g_as_polynomial,
    independence_certificate,
    lemma_dichotomy_grid,
    seifert_kn,
    sigma_bar,
    skein_check,
)

print("Delta_K0 =", seifert_kn(0).alexander)
print("Delta_K1 =", seifert_kn(1).alexander)
print("skein up to n = 50:", skein_check(50))

num, den = g_as_polynomial()
print("\ng(t) = G_num(c) / G_den(c) with c = cos t")
print("  G_num =", num)
print("  G_den =", den)
print("  g(pi) =", num(-1) / den(-1))

seq = build_omega_sequence(12)
print("\nl0 = %d, window edge eps ~ %.4f rad" % (seq.l0, seq.epsilon))
for l, e in sorted(seq.entries.items()):
    w = e.point
    print("  omega_%-2d  u = %-4s  cos = %.6f  F(omega, %d) = %+.3e"
          % (l, w.parameter, float(w.cosine), l, float(F(w, l))))

# Each row is l, each column m. The difference sigma(K_m) - sigma(K_0) is 0
# below the diagonal and -2 on and above it.
ls = range(seq.l0 + 1, seq.l0 + 9)
cells = {(c.l, c.m): c.sigma_diff for c in lemma_dichotomy_grid(seq, ls, ls)}
print("\n     m:" + "".join("%4d" % m for m in ls))
for l in ls:
    print("l = %2d:" % l + "".join("%4d" % cells[l, m] for m in ls))

print("\nsigma_bar(J_n), first 6 coordinates")
for n in range(seq.l0 + 1, seq.l0 + 7):
    print("  J_%d ->" % n, sigma_bar(KnotCombo.J(n), seq, 6))

for text in ("K2", "2K2 - 2K4", "K3 - 3K5 + K7"):
    w = independence_certificate(KnotCombo.parse(text), seq)
    print("\n%-14s nonzero signature %d at omega_%d (%s)" % (text, w.sigma, w.l, w.route))
