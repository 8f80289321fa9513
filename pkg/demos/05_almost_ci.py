"""Case (B) families whose tangent cone needs exactly four generators."""

from cimc import CaseBParams, almost_ci_family, analyze_tangent_cone

for params in [CaseBParams((3, 2, 4, 4), (2, 3), (1, 1, 0)), CaseBParams((3, 2, 3, 4), (1, 3), (2, 1, 0))]:
    fam = almost_ci_family(params)
    print(params, "strict" if fam.strict else "equality", "b =", fam.vector.entries)
    for w in range(0, 5):
        curve = fam.curve(w)
        if not curve.is_coprime:
            continue
        an = analyze_tangent_cone(curve, fam.generators(w))
        print(f"  w={w} n={curve.n} mu={an.mu} CM={an.cm.is_cm}")
        print("     predicted", [str(f) for f in fam.predicted_tangent_generators(w)])
        print("     computed ", [str(f) for f in an.minimal_tangent_generators])
