"""Racks, braided sets and the invariants the rest of the library leans on.

Run: python3 demos/racks_and_braided_sets.py
"""

from braidrack import groups as G
from braidrack import rack as R

# A rack is a table op[x][y] = x^y whose columns are bijections and which is
# self-distributive. Every rack is a braided set via (x, y) -> (y, x^y).
x, perms = R.transposition_rack(3)
print("transpositions of S_3:", perms)
print("operation table:", [list(r) for r in x.rows])
print("validation:", R.validate_braided_set(x.to_braided_set()))

# The two-element rack N is self-distributive but not squarefree: x^x != x.
n = R.n_rack()
rep = R.validate_braided_set(n.to_braided_set())
print("N rack squarefree?", rep.is_squarefree)

# Conjugation racks inside a group: here transpositions and 3-cycles of S_3,
# which splits into two components.
s3 = G.symmetric(3)
mixed, emb = R.conjugation_rack(s3, [G.element_index(s3, "(1 2)"), G.element_index(s3, "(1 2 3)")])
comp = R.components(mixed)
print("mixed rack components:", comp.component_sizes)

# Inn(X) is generated by the columns; z is the central word with x^z = x.
for rack in (x, n, mixed):
    print(f"size {rack.size}: |Inn| = {R.inner_group(rack).order}, z = {R.central_word_z(rack)}")

# Small racks can be enumerated outright.
print("racks of size 1..3:", [len(R.enumerate_racks(k)) for k in (1, 2, 3)])
