"""
The outer cone from strong subadditivity and weak monotonicity
==============================================================

Dualize the three-party cone and recover its essential inequalities,
then confirm two of them are facets.
"""

import time

import itertools

from entrocone.cones import PolyCone, adjoint_action, correlated_vector, dual_cone, is_facet, symmetry_action
from entrocone.inequalities import pippenger_sets, ssa, von_neumann_cone, weak_monotonicity

for n in (3, 4):
    ineqs = von_neumann_cone(n)
    t0 = time.perf_counter()
    cone = PolyCone.from_functionals(i.functional for i in ineqs)
    rays = dual_cone(cone).generators
    e_delta, e_e = pippenger_sets(n)
    print(f"n={n}: {len(ineqs)} instances -> {len(rays)} essential ones "
          f"({len(e_delta)} SSA + {len(e_e)} WM) in {time.perf_counter() - t0:.1f}s")

print("\nessential inequalities for n=3:")
for ineq in sum(pippenger_sets(3), []):
    print(f"  {ineq.name:14s} {ineq.functional}")

# the correlated-bit vectors lie in the cone and witness the SSA facet
n = 3
witnesses = [correlated_vector(I, n) for I in range(1, 1 << n)]
delta = ssa({2, 3}, {1, 3}, n)
print("\nΔ[23,13]", is_facet(delta, witnesses))

# WM is tight on too few of them, but it is an image of Δ under S_4,
# so the moved witnesses do the job
wm = weak_monotonicity({1, 2}, {2, 3}, n)
print("E[12,23] with v^(I):", is_facet(wm, witnesses))
perm = next(p for p in itertools.permutations(range(1, 5)) if adjoint_action(p, delta).primitive() == wm.primitive())
moved = [symmetry_action(perm, w) for w in witnesses]
print(f"E[12,23] with witnesses moved by {perm}:", is_facet(wm, moved))
