"""Tangent cones: local standard bases, I_*, and two Cohen-Macaulay tests."""

from cimc import CaseAParams, MonomialOrder, analyze_tangent_cone, cm_case_a, standard_basis, tangent_ideal
from cimc.ring import format_polynomial

p = CaseAParams(a=(4, 3, 3, 5), u=(9, 3, 2, 7))
order = MonomialOrder.local((3, 4, 2, 1))

sb = standard_basis([b.polynomial() for b in p.binomials()], order)
print("standard basis under", order)
for f in sb:
    print("  ", format_polynomial(f, order))
print("I_* generated by", [str(f) for f in tangent_ideal(sb)])

# closed form vs Hilbert series
print("closed form:", cm_case_a(p))
an = analyze_tangent_cone(p.curve(), p.binomials(), priority=(3, 4, 2, 1))
print("Hilbert series test:", an.cm)
print("mu =", an.mu, " multiplicity =", an.multiplicity, " min n =", min(p.curve().n))

# the neighbouring curve (15,25,24,16) is not CM: x1 kills something in the tangent cone
bad = CaseAParams(a=(5, 3, 2, 3), u=(1, 1, 1, 1))
print("\n(15,25,24,16):", cm_case_a(bad).witness)
print("  mu =", analyze_tangent_cone(bad.curve(), bad.binomials()).mu)
