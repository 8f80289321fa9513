"""Non-CM tangent cones with non-decreasing Hilbert functions."""

from cimc import MonomialIdeal, analyze_tangent_cone, hilbert_numerator, rossi_family
from cimc.hilbert import colon_by_monomial

for m, w in [(1, 0), (1, 2), (2, 1)]:
    curve, gens = rossi_family(m, w)
    an = analyze_tangent_cone(curve, gens)
    print(f"m={m} w={w}  n={curve.n}  CM={an.cm.is_cm}")
    print("   lead ideal", an.lead_ideal)
    print("   numerator over (1-t):", an.reduced_numerator)
    print("   HF", an.hf_prefix[:12], "...  e =", an.multiplicity)

# one step of the colon recursion by hand
J2 = MonomialIdeal.parse("x2^2,x3^2,x4^7,x2*x4^5")
q1 = (0, 0, 1, 2)
print("\nJ2 : x3 x4^2 =", colon_by_monomial(J2, q1))
print("p(J2) =", hilbert_numerator(J2))
