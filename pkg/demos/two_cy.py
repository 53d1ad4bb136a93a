"""Evaluation forms over the preprojective algebra of A2.

Run: python3 demos/two_cy.py
"""

from __future__ import annotations

from hallcluster.quiver import linear_a
from hallcluster.twocy import class_table, delta_form, preprojective, thm82_check, thm82_sweep

pre = preprojective(linear_a(2))
types = [(1, 2), (2, 1)]
for name in ("S1+S2", "P1", "P2"):
    print(f"delta_{name} =", delta_form(pre, name, types).values)

t = class_table(pre, (2, 1))
print(f"\ngrade (2,1): {t.iso_classes} classes in {len(t.buckets)} buckets")

r = thm82_check(pre, "S1", "S2", types)
print("\nM=S1, N=S2:", r.lhs, "=", r.rhs)
reports = thm82_sweep(pre, 3)
print(f"all pairs up to total dimension 3: {sum(x.ok for x in reports)}/{len(reports)} hold")
