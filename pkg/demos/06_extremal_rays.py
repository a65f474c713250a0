"""
Critical states and extremal rays
=================================

An isolated extremal ray needs a critical entropy map.  Compare the
analytic differential with finite differences, then sort some states.
"""

import numpy as np

from entrocone.entropy import DensityMatrix, JointDistribution, PureState, ghz_state
from entrocone.extremal import (
    classify_classical,
    classify_quantum,
    entropy_differential,
    finite_difference_differential,
)

rng = np.random.default_rng(0)
psi = rng.normal(size=8) + 1j * rng.normal(size=8)
psi = PureState((2, 2, 2), psi / np.linalg.norm(psi))
rep = entropy_differential(psi)
fd = finite_difference_differential(psi)
print("random 3-qubit state: rank", rep.rank, "relative error", np.abs(rep.matrix - fd).max() / np.abs(fd).max())

ghz = entropy_differential(ghz_state(3))
print("GHZ: max |dS| =", np.abs(ghz.matrix).max(), " flat:", all(ghz.flat.values()))

states = {
    "GHZ, 3 qubits": ghz_state(3),
    "GHZ, 4 qubits": ghz_state(4),
    "product": PureState((2, 2), np.kron([1, 0], [0.6, 0.8])),
    "random mixed": DensityMatrix((2, 2), np.diag(rng.dirichlet(np.ones(4)))),
}
for name, s in states.items():
    v = classify_quantum(s)
    print(f"  {name:14s} {v.label}")

print("classical:", classify_classical(JointDistribution((2,), [2 / 3, 1 / 3])).label)
