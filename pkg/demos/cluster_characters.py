"""Cluster characters of A3 modules and a few multiplication identities.

Run: python3 demos/cluster_characters.py
"""

from __future__ import annotations

from hallcluster.cc import cc, ck_check, cluster_mult_check
from hallcluster.quiver import Quiver, kronecker, linear_a

a3 = Quiver(3, ((0, 1), (2, 1)))  # 1 -> 2 <- 3
for name in ("S1", "S2", "S3", "P1", "P3", "I2"):
    print(f"X_{name:3s}= {cc(a3, name)}")

print("\nX_S1 * X_P3 =", cc(a3, "S1") * cc(a3, "P3"))
print("1 + X_I2    =", cc(a3, "I2") + 1)

q = linear_a(2, "left")
r = ck_check(q, "S2+S2", "S1+S1")
print("\nExtension strata for M = S2+S2, N = S1+S1:")
for mid, poly in r.extra["module_strata"].items():
    print(f"  {mid:10s} {poly}")
print("identity holds:", r.ok)

kr = kronecker()
r = cluster_mult_check(kr, "S1", "S2")
print("\nKronecker, 2 X_S1 X_S2 =", r.lhs)
for side, mid, poly, chi in r.terms:
    print(f"  {side:4s} {mid:12s} chi={chi}")
