"""Walk through the Hall algebra of 1 -> 2 and check Green's formula.

Run: python3 demos/hall_and_green.py
"""

from __future__ import annotations

from hallcluster.green import green_check, riedtmann_peng_check, universe
from hallcluster.quiver import Quiver, linear_a
from hallcluster.sweeps import green_sweep

q = linear_a(2)
alg = universe(q, 2, (2, 2))

print("Isoclasses of dimension (1,1) over F_2:")
for e in alg.classes((1, 1)):
    print(f"  {e.label}")

# S2 * S1 has only the split extension; S1 * S2 also sees the indecomposable P1.
print("u_S1 * u_S2 =", alg.product(alg.basis("S1"), alg.basis("S2")))
print("u_S2 * u_S1 =", alg.product(alg.basis("S2"), alg.basis("S1")))

print("\nOne instance of Green's formula:")
print(" ", green_check(alg, "S1", "S2", "S1", "S2").line())

for p in (2, 3):
    print(" ", green_sweep(q, p, 4).summary())

# The product-of-automorphisms identity, at a point where the naive form breaks.
w = riedtmann_peng_check(universe(Quiver(1, ()), 2, (2,)), "S1", "S1", "S1+S1")
print(f"\nS,S -> S+S over F_2: corrected {w.lhs} = {w.rhs}; "
      f"naive form gives {w.extra['printed_lhs']} vs {w.extra['printed_rhs']}")
