"""Partition counts and weight multiplicities, with the brute-force oracle
run side by side on a small target grid.
"""

from itertools import product

from chevalley import (PartitionTable, RootSystem, WeylGroup,
                       brute_force_partition_count, height,
                       weight_multiplicity)

rs = RootSystem("C", 2)
table = PartitionTable(rs)

print("C2 partition counts P_n(nu) (rows: nu, cols: n):")
for nu in product(range(4), repeat=2):
    counts = [table.count(nu, n) for n in range(height(nu) + 1)]
    oracle = [brute_force_partition_count(rs, nu, n)
              for n in range(height(nu) + 1)]
    assert counts == oracle
    print(f"  nu={nu}: {counts}  total={table.total(nu)}")

print("\nA2 adjoint module (highest weight (1,1), dimension 8):")
a2 = RootSystem("A", 2)
group = WeylGroup(a2)
for mu in [(1, 1), (0, 0), (-1, 2), (2, -1), (-1, -1)]:
    m = weight_multiplicity(group, (1, 1), mu)
    print(f"  multiplicity of {mu}: {m}")
