"""Generating tuples in a finite group and a cyclic-shift certificate.

Run: python3 demos/nielsen_and_abundance.py
"""

from braidrack import groups as G
from braidrack import nielsen as N

s3 = G.symmetric(3)
t = G.element_index(s3, "(1 2)")

# Product-one generating tuples of transpositions; none exist for n = 2.
for n in (2, 4, 6):
    plain = sum(1 for _ in N.enumerate_nielsen(s3, [t], [n]))
    classes = sum(1 for _ in N.enumerate_nielsen(s3, [t], [n], up_to_conj=True))
    print(f"n={n}: {plain} tuples, {classes} up to conjugation")

print("d_normal:", {name: N.d_normal(G.by_name(name)) for name in ("S3", "V4", "A5")})

# An abundant class: conjugates of x by powers of one element generate G.
y = G.element_index(s3, "(1 2 3)")
print("conjugates of (1 2) under (1 2 3):", [s3.label(c) for c in N.cyclic_conjugates(s3, t, y)])

# Repeating those conjugates gives a tuple whose class is fixed by the n-cycle
# sigma_{n-1}...sigma_1, so the stabilizer image contains an n-cycle.
cert = N.abundant_ncycle_certificate(s3, t, y, 36)
print(cert.as_dict())

a5 = G.alternating(5)
x5 = G.element_index(a5, "(1 2 3)")
y5 = N.find_abundant(a5, x5)
print("A_5 witness:", a5.label(y5), "certificate at n=3600:",
      N.abundant_ncycle_certificate(a5, x5, y5, 3600).verified)
