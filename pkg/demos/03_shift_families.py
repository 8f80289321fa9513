"""Shifting n along the 44 vectors keeps the complete intersection property."""

from cimc import CaseAParams, CaseBParams, family_scan, shift_vector, w0_threshold

p = CaseAParams(a=(5, 3, 2, 3), u=(1, 1, 1, 1))
d1 = shift_vector("A", 9, p)
print("d1 =", d1.entries, "slots", d1.slots, "w0 =", w0_threshold(p))
for r in family_scan("A", 9, p, range(0, 9)):
    if r.status == "skipped-gcd":
        print(f"  w={r.w}  n={r.curve.n}  gcd {r.curve.gcd}, skipped")
    else:
        print(f"  w={r.w}  n={r.curve.n}  CI={r.ci_verified}  mu={r.mu}  CM={r.cm.is_cm}")

# b16 on the case (B) example: CM up to w=5, then not
q = CaseBParams(a=(10, 3, 7, 11), u=(11, 6), v=(1, 8, 1))
print("\nb16 =", shift_vector("B", 16, q).entries)
for r in family_scan("B", 16, q, range(0, 11)):
    print(f"  w={r.w:2d}", r.status if not r.gcd_ok else f"mu={r.mu} CM={r.cm.is_cm}")
