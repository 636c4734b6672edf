"""Factorization statistics of polynomials over a prime field.

Run: python3 demos/finite_field_statistics.py
"""

from braidrack import ffstats as F
from braidrack import perm as P

q = 5
print("zeta_5(2) =", F.zeta_q(q, 2))

# Squarefree monic polynomials of degree n number q^n - q^(n-1).
for n in range(1, 5):
    print(f"degree {n}: {sum(1 for _ in F.squarefree_polys(q, n))} squarefree, "
          f"{F.necklace_count(q, n)} irreducible")

f = (1, 0, 1)            # T^2 + 1
print(F.format_poly(f), "over F_3 has type", F.factorization_type(f, 3))

# The von Mangoldt value of f is an alternating sum of exterior-power characters.
for t in F.partitions(4):
    print(t, F.alternating_exterior_sum(t))

# Frequencies predicted from a monodromy group, keyed by cycle types.
pred = F.chebotarev_predict(F.product_of_symmetric([3, 2]), P.BlockStructure.consecutive([3, 2]))
print(pred.as_json()["frequencies"])

# Quadratic extensions of F_q(T) split at infinity correspond to monic squarefree f.
for qq, n in [(3, 2), (3, 4), (5, 2), (5, 4)]:
    print(F.z2_extension_stats(qq, n).as_row())
