"""
Type classes and partitions
===========================

Uniform distributions on type classes approximate any rational entropy
vector; partition combinatorics decides which joint types have given
marginal types.
"""

import math
from fractions import Fraction

from entrocone.entropy import JointDistribution, entropy_vector_classical
from entrocone.typeclasses import (
    aep_mass,
    chan_yeung_vector,
    classical_kronecker,
    kostka,
    marginal_compatible,
    partitions,
)

p = JointDistribution((2, 2), [Fraction(1, 2), 0, Fraction(1, 4), Fraction(1, 4)], exact=True)
target = entropy_vector_classical(p).entries
print("target entropy vector", target.round(4))
for k in (1, 4, 16, 64):
    v = chan_yeung_vector(p, k).entries / (4 * k)
    print(f"  k={k:3d}  normalized {v.round(4)}  error {abs(v - target).max():.4f}")

half = [Fraction(1, 2)] * 2
for n in (16, 64, 256):
    print(f"AEP mass of the eps=1/4 window, n={n}: {float(aep_mass(half, n, Fraction(1, 4))):.5f}")

print("\nK_(2,1),(1,1,1) =", kostka((2, 1), (1, 1, 1)))
print("K_(3,2),(2,2,1) =", kostka((3, 2), (2, 2, 1)))

n = 6
parts = list(partitions(n, max_parts=3))
ok = sum(marginal_compatible(l, m, k) for l in parts for m in parts for k in parts)
print(f"\n{ok} of {len(parts) ** 3} triples of partitions of {n} are marginal-compatible")
print("h for joint (1,1), margins (1,1),(1,1):", classical_kronecker((1, 1), (1, 1), (1, 1)))
print("joint (2,2) with margins (3,1),(3,1)?", marginal_compatible((2, 2), (3, 1), (3, 1)))
print("type class of 32 heads in 64 tosses has", math.comb(64, 32), "strings")
