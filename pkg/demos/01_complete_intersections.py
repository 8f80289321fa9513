"""Build curves from generator data and certify that they are complete intersections."""

from cimc import CaseAParams, CaseBParams, critical_exponent, is_member, verify_ci
from cimc.families import lattice_matrix
from cimc.intlin import is_mixed_dominating, smith_invariant_factors, transpose

# case (A): x1^5-x2^3, x3^2-x4^3, x1 x2 - x3 x4
p = CaseAParams(a=(5, 3, 2, 3), u=(1, 1, 1, 1))
curve = p.curve()
print("n =", curve.n, "gcd", curve.gcd)
for b in p.binomials():
    print("  ", b, " weight", curve.weight(b.plus))

# the critical exponents give back a1..a4
print("critical exponents", [critical_exponent(i, curve) for i in range(1, 5)])
print("75 in <25,24,16>?", is_member(75, (25, 24, 16)))

# the certificate: saturated lattice and a mixed dominating transpose
M = lattice_matrix(p.binomials())
print("invariant factors", smith_invariant_factors(M))
print("mixed dominating", is_mixed_dominating(transpose(M)))
print("complete intersection:", verify_ci(curve, p.binomials()))

# case (B)
q = CaseBParams(a=(10, 3, 7, 11), u=(11, 6), v=(1, 8, 1))
print("\nn =", q.curve().n, "CI:", verify_ci(q.curve(), q.binomials()))
