"""
Stabilizer entropy vectors
==========================

Isotropic submodules of Z_d^(2n) give entropy vectors by counting.  We
compare with the dense states, split d=6 into its prime parts and check
the linear-rank inequality on the prime cases.
"""

import itertools
import math
import random
from collections import Counter

import numpy as np

from entrocone.cones import adjoint_action, evaluate, inject, purify_map
from entrocone.entropy import entropy_vector_quantum, stabilizer_state_dense
from entrocone.inequalities import ingleton
from entrocone.linear_rank import rank_vector, stabilizer_rank_family
from entrocone.stabilizer import (
    PhaseSpace,
    crt_decompose,
    enumerate_isotropic,
    random_isotropic,
    stabilizer_entropy_vector,
)

for n, d in ((2, 2), (3, 2), (2, 3)):
    mods = enumerate_isotropic(PhaseSpace(n, d)).modules
    worst = max(
        float(np.max(np.abs(stabilizer_entropy_vector(M).entries - entropy_vector_quantum(stabilizer_state_dense(M)).entries)))
        for M in mods
    )
    points = Counter(tuple(np.round(stabilizer_entropy_vector(M).entries / math.log2(d), 6)) for M in mods)
    print(f"d={d} n={n}: {len(mods)} modules, {len(points)} distinct vectors, dense deviation {worst:.1e}")

rng = random.Random(0)
M = random_isotropic(PhaseSpace(2, 6), rng, steps=2)
parts = crt_decompose(M)
print("\nd=6 module", M.generators)
for p in parts:
    print(f"  mod {p.d}:", p.generators, np.round(stabilizer_entropy_vector(p).entries, 4))
print("  sum of parts  ", np.round(sum(stabilizer_entropy_vector(p).entries for p in parts), 4))
print("  whole         ", np.round(stabilizer_entropy_vector(M).entries, 4))

# three-qubit stabilizer states extend to four-party pure ones
f = ingleton().functional
instances = {adjoint_action(p + (5,), f).primitive() for p in itertools.permutations(range(1, 5))}
worst = min(
    evaluate(g, purify_map(stabilizer_entropy_vector(M)))
    for M in enumerate_isotropic(PhaseSpace(3, 2)).modules
    for g in instances
)
print("\nsmallest Ingleton value over qubit stabilizer states:", worst)
for M in enumerate_isotropic(PhaseSpace(2, 2)).modules[-3:]:
    print("rank vector behind", M.generators, "->", rank_vector(stabilizer_rank_family(M)))
