"""Counting braid orbits as the number of points grows.

Run: python3 demos/semigroup_stabilization.py
"""

from braidrack import rack as R
from braidrack import semigroup as S

x, _ = R.transposition_rack(3)

# Orbit classes multiply by concatenation; this is the structure semigroup.
u, v = S.orbit_class(x, (0,)), S.orbit_class(x, (1,))
print("class of (0)(1):", (u * v).rep)

# Generating classes settle to a constant as n grows.
table = S.stabilization_table(x, [range(1, 9)])
print(table.to_csv())
print("stable from n =", table.thresholds[0])

# Past that point, multiplying by a single letter is a bijection between levels.
for n in range(3, 7):
    rep = S.mult_map_check(x, (0,), (n,))
    print(f"M_0: X*({n}) -> X*({n + 1}) injective={rep.injective} surjective={rep.surjective}")
