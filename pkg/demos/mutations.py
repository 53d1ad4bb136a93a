"""Seed mutation, closed enumeration and the finite-type test.

Run: python3 demos/mutations.py
"""

from __future__ import annotations

from hallcluster.cluster import CeilingExceeded, Seed, enumerate_clusters, finite_type_test, mutate_sequence

seeds = mutate_sequence(Seed.initial([[0, 1], [-1, 0]]), [1, 2] * 5)
for k, s in enumerate(seeds):
    print(k, [str(v) for v in s.vars])
print("back to the start:", seeds[-1].same_as(seeds[0], up_to_relabel=False))

a3 = [[0, 1, 0], [-1, 0, -1], [0, 1, 0]]
res = enumerate_clusters(Seed.initial(a3))
print(f"\nA3: {len(res.variables)} cluster variables, {res.seeds} seeds")

kr = [[0, 2], [-2, 0]]
try:
    enumerate_clusters(Seed.initial(kr), ceiling=20)
except CeilingExceeded as exc:
    print("\nKronecker:", exc)
v = finite_type_test(kr, 50)
print("finite-type verdict:", v.verdict, "witness", v.semidefinite_witness)
