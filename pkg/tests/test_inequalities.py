import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from entrocone.cones import Functional, adjoint_action, evaluate, is_balanced
from entrocone.entropy import (
    DensityMatrix,
    JointDistribution,
    entropy_vector_classical,
    entropy_vector_quantum,
)
from entrocone.inequalities import (
    catalog,
    conditional_mutual_information,
    elemental_shannon,
    ingleton,
    mutual_information,
    pippenger_sets,
    ssa,
    von_neumann_cone,
    weak_monotonicity,
    zhang_yeung,
)
from entrocone.linear_rank import SubspaceFamily, rank_vector

from helpers import random_density


def test_named_examples():
    f = ssa({1, 2}, {2, 3}, 3)
    assert f == Functional.from_terms(3, {0b011: 1, 0b110: 1, 0b111: -1, 0b010: -1})
    g = weak_monotonicity({1, 2}, {2, 3}, 3)
    assert g == Functional.from_terms(3, {0b011: 1, 0b110: 1, 0b001: -1, 0b100: -1})
    assert mutual_information({1}, {2}, 2) == Functional.from_terms(2, {1: 1, 2: 1, 3: -1})
    assert conditional_mutual_information({1}, {1}, {2}, 2) == Functional.from_terms(2, {3: 1, 2: -1})


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_elemental_count(n):
    assert len(elemental_shannon(n)) == n + math.comb(n, 2) * 2 ** max(n - 2, 0) * (n >= 2)


@pytest.mark.parametrize("n,nd,ne", [(3, 6, 6), (4, 24, 16)])
def test_pippenger_counts(n, nd, ne):
    e_delta, e_e = pippenger_sets(n)
    assert (len(e_delta), len(e_e)) == (nd, ne)
    assert all(is_balanced(f.functional) for f in e_delta)


def test_von_neumann_counts():
    assert len(von_neumann_cone(3)) == 31
    assert len(von_neumann_cone(4)) == 150


def test_zhang_yeung_coefficients():
    # hand expansion of the compact form
    expect = {
        0b0001: -1, 0b0100: -2, 0b1000: -2, 0b0011: -1, 0b0101: 3, 0b1001: 3,
        0b0110: 1, 0b1010: 1, 0b1100: 3, 0b1101: -4, 0b1110: -1,
    }
    assert zhang_yeung().functional == Functional.from_terms(4, expect)


def test_ingleton_coefficients():
    expect = {0b0001: -1, 0b0010: -1, 0b0011: 1, 0b0101: 1, 0b0110: 1, 0b1001: 1, 0b1010: 1,
              0b1100: -1, 0b0111: -1, 0b1011: -1}
    assert ingleton().functional == Functional.from_terms(4, expect)


def test_catalog_contents():
    names = [x.name for x in catalog(4)]
    assert "Zhang-Yeung" in names and "Ingleton" in names
    assert len(names) == len(set(names))
    assert len(catalog(3)) == len(elemental_shannon(3)) + 12


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_elemental_inequalities_on_distributions(seed, n):
    rng = np.random.default_rng(seed)
    dims = tuple(int(x) for x in rng.integers(1, 4, n))
    p = rng.dirichlet(np.full(int(np.prod(dims)), 0.3))
    v = entropy_vector_classical(JointDistribution(dims, p))
    for ineq in elemental_shannon(n):
        assert evaluate(ineq.functional, v) >= -1e-9


def test_zhang_yeung_on_random_distributions():
    rng = np.random.default_rng(2024)
    f = zhang_yeung().functional
    worst = np.inf
    for _ in range(2000):
        dims = tuple(int(x) for x in rng.integers(2, 4, 4))
        p = rng.dirichlet(np.full(int(np.prod(dims)), 0.2))
        worst = min(worst, evaluate(f, entropy_vector_classical(JointDistribution(dims, p))))
    assert worst >= -1e-9


@given(st.integers(0, 10_000))
def test_von_neumann_cone_on_random_states(seed):
    rng = np.random.default_rng(seed)
    v = entropy_vector_quantum(DensityMatrix((2, 2, 2), random_density(rng, (2, 2, 2), rank=int(rng.integers(1, 9)))))
    for ineq in von_neumann_cone(3):
        assert evaluate(ineq.functional, v) >= -1e-9


@pytest.mark.parametrize("p,m", [(2, 3), (2, 4), (3, 3)])
def test_ingleton_on_subspace_ranks(p, m):
    rng = random.Random(p * 100 + m)
    f = ingleton().functional
    for _ in range(150):
        subs = [
            [[rng.randrange(p) for _ in range(m)] for _ in range(rng.randint(0, 2))]
            for _ in range(4)
        ]
        r = rank_vector(SubspaceFamily(p, m, tuple(tuple(map(tuple, s)) for s in subs)))
        assert evaluate(f, r) >= 0


def test_ingleton_fails_on_a_four_atom_distribution():
    # uniform on the outcomes 0001, 0100, 0111, 1110 (party 1 first)
    probs = np.zeros(16)
    probs[[0b0001, 0b0100, 0b0111, 0b1110]] = 0.25
    v = entropy_vector_classical(JointDistribution((2, 2, 2, 2), probs))
    assert all(evaluate(i.functional, v) >= -1e-12 for i in elemental_shannon(4))
    assert evaluate(ingleton().functional, v) == pytest.approx(-0.1225562489, abs=1e-9)


@pytest.mark.parametrize("n", [2, 3])
def test_pippenger_set_is_closed_under_symmetry(n):
    e_delta, e_e = pippenger_sets(n)
    base = {f.functional.primitive() for f in e_delta + e_e}
    for perm in itertools.permutations(range(1, n + 2)):
        assert {adjoint_action(perm, f).primitive() for f in base} == base


def test_von_neumann_catalog_is_closed_under_symmetry():
    base = {f.functional.primitive() for f in von_neumann_cone(3)}
    for perm in itertools.permutations(range(1, 5)):
        assert {adjoint_action(perm, f).primitive() for f in base} == base
