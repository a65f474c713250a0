"""
Permuting a purifying party
===========================

Entropy vectors of n parties carry an action of S_(n+1): purify, relabel,
discard.  Classical monotonicity is not preserved by it, which is why the
balanced part of a functional is the interesting one.
"""

import itertools

import numpy as np

from entrocone.cones import (
    Functional,
    adjoint_action,
    balance,
    balanced_subspace_basis,
    direct_sum_obstruction,
    evaluate,
    monotonicity,
    symmetry_action,
    transposition,
)
from entrocone.entropy import PureState, entropy_vector_quantum
from entrocone.inequalities import weak_monotonicity

rng = np.random.default_rng(1)
psi = rng.normal(size=8) + 1j * rng.normal(size=8)
psi /= np.linalg.norm(psi)
full = entropy_vector_quantum(PureState((2, 2, 2), psi))
v = [0.0] + list(full.entries[1:4])
print("two-party marginal vector:", np.round(v, 4))
for perm in itertools.permutations((1, 2, 3)):
    print(f"  {perm}:", np.round(symmetry_action(perm, v).entries, 4))

# H(1|2) >= 0 holds classically; swapping party 1 with the purifier breaks it
h = Functional.from_terms(2, {0b11: 1, 0b10: -1})
moved = adjoint_action(transposition(1, 3, 3), h)
print("\nH(1|2) =", h, "  moved to", moved)
print("on a Bell pair:", evaluate(h, [0, 1, 1, 0]), evaluate(moved, [0, 1, 1, 0]))

print("\nbalance(S(1)) on two parties:", balance(Functional.basis(2, {1})))
print("balanced subspace dimensions:", [len(balanced_subspace_basis(n)) for n in range(1, 5)])

n = 4
B = balanced_subspace_basis(n)
pair = [weak_monotonicity({1, 2}, {2, 3, 4}, n), weak_monotonicity({2, 3}, {1, 2, 4}, n)]
print("\nmonotonicity rays obstruct a direct sum:", direct_sum_obstruction([monotonicity(i, n) for i in range(1, n + 1)], B))
print("two WM rays obstruct a direct sum (n=4):", direct_sum_obstruction(pair, B))
