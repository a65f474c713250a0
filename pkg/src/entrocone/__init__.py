"""Entropy vectors, entropy cones and the objects that populate them.

Submodules:

- :mod:`entrocone.entropy`: Shannon and von Neumann entropy vectors, dense states
- :mod:`entrocone.cones`: exact functionals, polyhedral cones, entropy-space maps
- :mod:`entrocone.inequalities`: named information inequalities
- :mod:`entrocone.stabilizer`: symplectic phase spaces and stabilizer entropies
- :mod:`entrocone.typeclasses`: type classes and partition combinatorics
- :mod:`entrocone.extremal`: flatness and entropy differentials
- :mod:`entrocone.linear_rank`: subspace rank vectors over prime fields
"""

__version__ = "0.1.0"

from .entropy import (
    DensityMatrix,
    EntropyVector,
    JointDistribution,
    PureState,
    entropy_vector_classical,
    entropy_vector_quantum,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)
from .cones import Functional, PolyCone, evaluate
from .stabilizer import PhaseSpace, Submodule, canonicalize, stabilizer_entropy_vector

__all__ = [
    "DensityMatrix",
    "EntropyVector",
    "Functional",
    "JointDistribution",
    "PhaseSpace",
    "PolyCone",
    "PureState",
    "Submodule",
    "canonicalize",
    "entropy_vector_classical",
    "entropy_vector_quantum",
    "evaluate",
    "partial_trace",
    "shannon_entropy",
    "stabilizer_entropy_vector",
    "von_neumann_entropy",
]
