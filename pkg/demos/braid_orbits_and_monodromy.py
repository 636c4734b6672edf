"""Hurwitz orbits of tuples and the image of their stabilizers in S_n.

Run: python3 demos/braid_orbits_and_monodromy.py
"""

import math

from braidrack import braid as B
from braidrack import rack as R

x, _ = R.transposition_rack(3)

# sigma_i replaces (c_i, c_{i+1}) by (c_{i+1}, c_i^{c_{i+1}}).
print("sigma_1 on (0, 2):", B.apply_generator(x, (0, 2), 1))

# The orbit of a tuple is found by breadth-first search; each member carries
# the permutation of positions along the tree path that reached it.
o = B.orbit(x, (0, 1, 2, 0))
print("orbit size:", len(o), "canonical member:", o.canonical())

# Schreier generators of the stabilizer map into S_n; their closure is the image.
for n in range(2, 6):
    seed = tuple(i % 3 for i in range(n))
    rep = B.classify_monodromy(x, seed)
    print(f"n={n} seed={seed} generates={rep.generates} image order={rep.image_order} of {math.factorial(n)}")

# With the two-element rack N every stabilizer lands in A_n.
n_rack = R.n_rack()
for n in (4, 6, 8):
    rep = B.classify_monodromy(n_rack, (0,) * n)
    print(f"N rack n={n}: image order {rep.image_order}, inside A_n: {rep.classification.inside_even_part}")

# Both braid relations hold on every tuple precisely because x is a rack.
print("braid relation violations, n=5:", B.braid_relation_violations(x, 5))
