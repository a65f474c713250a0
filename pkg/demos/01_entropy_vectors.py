"""
Entropy vectors of small states
===============================

Classical and quantum entropy vectors, the correlated-bit family and the
transform that turns it into the standard basis.
"""

import numpy as np

from entrocone.cones import correlated_vector, matus_transform
from entrocone.entropy import (
    DensityMatrix,
    PureState,
    correlated_distribution,
    entropy_vector_classical,
    entropy_vector_quantum,
    ghz_state,
)

# a Bell pair: both halves are maximally mixed, the whole is pure
bell = PureState((2, 2), np.array([1, 0, 0, 1]) / np.sqrt(2))
print("Bell pair     ", entropy_vector_quantum(bell))

# GHZ on three qubits: every proper marginal carries one bit
print("GHZ, 3 qubits ", entropy_vector_quantum(ghz_state(3)))

# classical mixtures have entropies that only grow with the subset
mixed = DensityMatrix((2, 2), np.diag([0.5, 0.25, 0.125, 0.125]))
print("diagonal state", entropy_vector_quantum(mixed))

# parties in I share one fair coin; everyone else is constant
n = 3
print("\ncorrelated bits v^(I) on three parties, and their transforms:")
for I in range(1, 1 << n):
    v = entropy_vector_classical(correlated_distribution(I, n))
    assert np.allclose(v.entries, correlated_vector(I, n))
    w = matus_transform(correlated_vector(I, n))
    print(f"  I={I:03b}  v={list(map(int, v.entries))}  ->  {list(map(int, w))}")
