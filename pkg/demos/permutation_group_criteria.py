"""Permutation-group tests: block products, homogeneity, invariable generation.

Run: python3 demos/permutation_group_criteria.py
"""

from braidrack import groups as G
from braidrack import perm as P

# Schreier-Sims gives exact orders even when they exceed 64 bits.
print("|S_30| =", P.symmetric_group(30).order)

# Where does a subgroup sit inside S_3 x S_2?
h = P.PermGroup([P.from_cycles([(0, 1)], 5), P.from_cycles([(0, 1, 2)], 5), P.from_cycles([(3, 4)], 5)], 5)
print(P.classify_in_product(h, P.BlockStructure.consecutive([3, 2])))

# Homogeneity: S_n is k-homogeneous for all k; AGL(1,5) is 2-homogeneous too,
# although it is far smaller than A_5.
agl = P.PermGroup([(1, 2, 3, 4, 0), (0, 2, 4, 1, 3)], 5)
print("AGL(1,5):", P.check_homogeneity_dichotomy(agl))

# A Young subgroup and an n-cycle generate S_n however the cycle is conjugated.
young = [P.transposition(0, 1, 6), P.from_cycles([(0, 1, 2, 3)], 6)]
cycle = [P.from_cycles([tuple(range(6))], 6)]
print("S_4 and a 6-cycle invariably generate S_6:", P.invariably_generates([young, cycle]))

# Subdirect products: the diagonal of A_5 x A_5 projects onto each factor but is not everything.
a5 = G.alternating(5)
print(P.product_criterion([(g, g) for g in range(a5.order)], [a5, a5]).as_dict())
