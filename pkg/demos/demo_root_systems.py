"""Walk through the exact root-system catalog.

Builds a few classical systems, prints their Cartan data, checks the
closed-form root counts, and evaluates some dimension products.
"""

from chevalley import RootSystem, WeylGroup

for family, rank in [("A", 2), ("C", 2), ("C", 3), ("G", 2), ("F", 4)]:
    rs = RootSystem(family, rank)
    group = WeylGroup(rs)
    print(f"== {family}{rank} ==")
    print("  Cartan matrix:", rs.cartan)
    print("  symmetrizer:  ", rs.symmetrizer)
    print(f"  {len(rs.positive_roots)} positive roots, "
          f"Coxeter number {rs.coxeter_number}, Weyl order {group.order}")
    print("  highest root:", rs.highest_root,
          " highest short root:", rs.highest_short_root)

print()
a2 = RootSystem("A", 2)
print("A2 dimension products:")
for lam in [(0, 0), (1, 0), (1, 1), (2, 1), (10, 10)]:
    print(f"  dim H0({lam}) = {a2.weyl_dimension(lam)}")

# the Steinberg weight (p^r - 1) * rho gives p^(r * #positive roots)
p, r = 5, 2
st = ((p ** r - 1),) * 2
print(f"\nSteinberg dimension at p={p}, r={r}: "
      f"{a2.weyl_dimension(st)} = {p}^{r * len(a2.positive_roots)}")
