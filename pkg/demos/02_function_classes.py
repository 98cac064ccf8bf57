"""Function tables and their structure classes.

A map between carriers is just a value vector.  The workbench enumerates
every table in a named class (additive, multiplicative, Leibniz,
derivation, logarithmic, the two homo-derivation notions) and conversely
classifies an arbitrary table by checking each identity at every pair.
"""
import fnq
from fnq.maps import (DERIVATION, LOGARITHMIC, MULTIPLICATIVE,
                      classify_map, enumerate_maps, inner_derivation,
                      lin_rank, identity_map)

z2 = fnq.zn(2)
print("multiplicative self-maps of Z_2 (value vectors):")
for t in enumerate_maps(z2, z2, MULTIPLICATIVE):
    print(f"  {t.values}")

gf3 = fnq.gf(3)
print("\nderivations on GF(3):",
      [t.values for t in enumerate_maps(gf3, gf3, DERIVATION)])
print("a field of prime order only carries the zero derivation; the")
print("nilpotent quotient F_2[x]/(x^2) is different:")
pq = fnq.poly_quot(2, 2)
for t in enumerate_maps(pq, pq, DERIVATION):
    marker = "  <- the coefficient map a+bx -> b" if t.values == (0, 2, 0, 2) else ""
    print(f"  {t.values}{marker}")

print("\nclassifying the identity map on Z_4:")
tags = sorted(str(c) for c in classify_map(identity_map(fnq.zn(4))))
print(f"  {tags}")
print("  (a homomorphism, but not Leibniz: x*y vs 2*x*y)")

ut2 = fnq.ut2(2)
b = 2  # the matrix [[0,1],[0,0]]
ad = inner_derivation(ut2, b)
print(f"\ninner derivation x -> x*b - b*x on UT2(2), b = {ut2.names[b]}:")
print(f"  values: {ad.values}")
print(f"  classes: {sorted(str(c) for c in classify_map(ad))}")

print("\nlinear independence is a rank computation over the scalar field:")
gf4 = fnq.gf(2, 2)
frob = fnq.FnTable(gf4, gf4, tuple(int(gf4.mul[e, e]) for e in range(4)))
print(f"  rank {{id, squaring}} on GF(4) = "
      f"{lin_rank([identity_map(gf4), frob], gf4)}")
mult = [t for t in enumerate_maps(gf4, gf4, MULTIPLICATIVE) if not t.is_zero()]
print(f"  distinct nonzero multiplicative maps on GF(4): {len(mult)}, "
      f"rank = {lin_rank(mult, gf4)} (always full: they are independent)")

print("\nlogarithmic maps live on the unit group; on GF(q) with q <= 9 the")
print("unit-group order is coprime to the characteristic, so only zero:")
for q, k in ((5, 1), (3, 2)):
    f = fnq.gf(q, k)
    logs = [t.values for t in enumerate_maps(f, f, LOGARITHMIC)]
    print(f"  GF({q ** k}): {logs}")
