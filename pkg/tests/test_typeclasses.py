import itertools
import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from entrocone.cones import evaluate
from entrocone.entropy import JointDistribution, correlated_distribution, shannon_entropy
from entrocone.inequalities import elemental_shannon
from entrocone.typeclasses import (
    Partition,
    aep_mass,
    chan_yeung_log_arguments,
    chan_yeung_vector,
    classical_kronecker,
    dim_permutation_module,
    dim_specht,
    dim_weyl,
    dominates,
    kostka,
    marginal_compatible,
    marginal_frequency,
    multiplicity_shape,
    partitions,
    restriction_multiplicities,
    schur_weyl_dimension_check,
    type_class_size,
    weak_compositions,
)

from helpers import brute_table_shapes


def brute_ssyt(shape, content):
    """Fill the diagram row by row with every weakly increasing assignment."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = [k + 1 for k, c in enumerate(content) for _ in range(c)]
    count = 0
    for filling in set(itertools.permutations(letters)):
        t = dict(zip(cells, filling))
        rows_ok = all(t[i, j] <= t[i, j + 1] for (i, j) in cells if (i, j + 1) in t)
        cols_ok = all(t[i, j] < t[i + 1, j] for (i, j) in cells if (i + 1, j) in t)
        count += rows_ok and cols_ok
    return count


def hook_content(shape, d):
    conj = [sum(1 for x in shape if x > j) for j in range(shape[0])] if shape else []
    num = den = 1
    for i, row in enumerate(shape):
        for j in range(row):
            num *= d + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def test_partition_parsing():
    assert Partition.parse("5,3,2,2,1,1,1").parts == (5, 3, 2, 2, 1, 1, 1)
    assert Partition.parse("").parts == ()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert len(list(partitions(10, max_parts=3))) == 14


def test_dominance():
    assert dominates((3,), (2, 1))
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((2, 2, 2), (3, 1, 1, 1))
    assert not dominates((3, 1, 1, 1), (2, 2, 2))


@pytest.mark.parametrize("counts", [(2, 1), (3, 3), (1, 1, 1, 1), (4, 0, 2)])
def test_type_class_size_by_enumeration(counts):
    n = sum(counts)
    brute = sum(1 for s in itertools.product(range(len(counts)), repeat=n)
                if tuple(Counter(s)[a] for a in range(len(counts))) == tuple(counts))
    assert type_class_size(counts) == brute


def test_type_class_size_spec_example():
    assert type_class_size([32, 32]) == math.comb(64, 32)


def test_marginal_frequency():
    counts = np.array([[1, 2], [3, 4]], dtype=object)
    assert list(marginal_frequency(counts, {1})) == [3, 7]
    assert list(marginal_frequency(counts, {2})) == [4, 6]
    assert list(marginal_frequency(counts, 0)) == [10]


def test_chan_yeung_correlated_bits():
    p = correlated_distribution({1, 2}, 2)
    assert chan_yeung_vector(p, 1).allclose([0, 1, 1, 1], atol=1e-12)
    assert chan_yeung_log_arguments(p, 3) == [1, 20, 20, 20]


def test_chan_yeung_is_a_uniform_type_class_entropy():
    # uniform string over the joint type class; each party sees its own coordinate string
    p = JointDistribution((2, 2), [Fraction(1, 4), Fraction(1, 4), Fraction(1, 2), 0], exact=True)
    k = 1
    counts = [int(x * 4 * k) for x in p.probs.reshape(-1)]
    letters = [a for a, c in enumerate(counts) for _ in range(c)]
    strings = sorted(set(itertools.permutations(letters)))
    decode = [(a // 2, a % 2) for a in range(4)]
    v = chan_yeung_vector(p, k)
    for mask in (1, 2, 3):
        views = Counter(tuple(tuple(decode[a][i] for i in range(2) if mask >> i & 1) for a in s) for s in strings)
        probs = np.array(list(views.values()), dtype=float) / len(strings)
        assert v.entries[mask] == pytest.approx(shannon_entropy(probs), abs=1e-12)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_chan_yeung_satisfies_shannon(k):
    p = JointDistribution((2, 2, 2), [Fraction(1, 8)] * 4 + [Fraction(1, 4), 0, Fraction(1, 8), Fraction(1, 8)], exact=True)
    v = chan_yeung_vector(p, k)
    assert all(evaluate(i.functional, v) >= -1e-9 for i in elemental_shannon(3))


def test_chan_yeung_needs_exact_input():
    with pytest.raises(ValueError):
        chan_yeung_vector(JointDistribution((2,), [0.5, 0.5]), 1)


def brute_aep(p, n, eps, norm):
    total = 0.0
    for s in itertools.product(range(len(p)), repeat=n):
        f = np.bincount(s, minlength=len(p)) / n
        dev = np.abs(f - np.array(p, dtype=float))
        dist = dev.sum() if norm == "l1" else dev.max()
        if dist <= eps + 1e-12:
            total += math.prod(p[a] for a in s)
    return total


@pytest.mark.parametrize("norm", ["l1", "inf"])
def test_aep_mass_by_enumeration(norm):
    p = [0.3, 0.7]
    assert aep_mass(p, 10, 0.25, norm) == pytest.approx(brute_aep(p, 10, 0.25, norm), abs=1e-12)
    q = [0.2, 0.3, 0.5]
    assert aep_mass(q, 6, 0.3, norm) == pytest.approx(brute_aep(q, 6, 0.3, norm), abs=1e-12)


def test_aep_mass_exact_and_examples():
    half = [Fraction(1, 2)] * 2
    m = aep_mass(half, 64, Fraction(1, 4))
    assert isinstance(m, Fraction)
    assert float(m) >= 0.95
    assert aep_mass(half, 64, 2) == 1
    with pytest.raises(ValueError):
        aep_mass(half, 4, 0.1, norm="l2")


def test_weak_compositions():
    comps = list(weak_compositions(3, 2))
    assert sorted(comps) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert len(list(weak_compositions(5, 3))) == math.comb(7, 2)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (3,)) == 0
    assert kostka((2, 1), (2, 1)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_by_tableau_enumeration(n):
    for mu in partitions(n):
        for lam in partitions(n):
            assert kostka(mu, lam) == brute_ssyt(mu, lam)
            assert (kostka(mu, lam) > 0) == dominates(mu, lam)


def test_kostka_is_symmetric_in_content():
    assert kostka((3, 2), (1, 2, 2)) == kostka((3, 2), (2, 2, 1)) == kostka((3, 2), (2, 1, 2))


def test_dim_weyl_examples():
    assert dim_weyl((1,), 3) == 3
    assert dim_weyl((1, 1, 1), 3) == 1
    assert dim_weyl((1, 1, 1, 1), 3) == 0


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_dim_weyl_hook_content(d):
    for n in range(1, 7):
        for mu in partitions(n):
            assert dim_weyl(mu, d) == max(hook_content(mu, d), 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_specht_dimensions(n):
    assert sum(dim_specht(mu) ** 2 for mu in partitions(n)) == math.factorial(n)
    for lam in partitions(n):
        assert sum(kostka(mu, lam) * dim_specht(mu) for mu in partitions(n)) == dim_permutation_module(lam)


def test_multiplicity_shape_examples():
    assert multiplicity_shape((5, 3, 2, 2, 1, 1, 1), 7) == (3, 2, 1, 1)
    assert multiplicity_shape((1,), 2) == (1, 1)
    with pytest.raises(ValueError):
        multiplicity_shape((1, 1, 1), 2)


def test_restriction_examples():
    assert restriction_multiplicities((1,), 2) == {(2,): 1, (1, 1): 1}
    assert restriction_multiplicities((2,), 2) == {(2,): 2, (1, 1): 1}


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_restriction_dimension_identity(d):
    for n in range(0, 6):
        for mu in partitions(n, max_parts=d):
            eta = restriction_multiplicities(mu, d)
            assert sum(m * dim_specht(nu) for nu, m in eta.items()) == dim_weyl(mu, d)


def test_schur_weyl():
    assert all(schur_weyl_dimension_check(d, n) for d in range(1, 4) for n in range(0, 7))


def test_kronecker_examples():
    assert classical_kronecker((1, 1), (1, 1), (1, 1)) == 2
    assert classical_kronecker((2,), (1, 1), (1, 1)) == 0
    assert classical_kronecker((2,), (2,), (2,)) == 1
    assert not marginal_compatible((2, 2), (3, 1), (3, 1))
    assert marginal_compatible((2, 1, 1), (3, 1), (3, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_kronecker_by_table_enumeration(n):
    parts = list(partitions(n))
    for mu in parts:
        for nu in parts:
            shapes = brute_table_shapes(mu, nu)
            for lam in parts:
                assert classical_kronecker(lam, mu, nu) == shapes.get(lam, 0)
                assert classical_kronecker(lam, mu, nu) == classical_kronecker(lam, nu, mu)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(*(st.sampled_from(list(partitions(n))),) * 3)))
def test_marginal_types_dominated_by_joint(triple):
    lam, mu, nu = triple
    if marginal_compatible(lam, mu, nu):
        assert dominates(mu, lam) and dominates(nu, lam)


def test_permutation_module_decomposes_over_tables():
    # M^mu ⊗ M^nu has dimension sum over lam of h * dim M^lam
    for n in range(1, 6):
        for mu in partitions(n):
            for nu in partitions(n):
                total = sum(classical_kronecker(lam, mu, nu) * dim_permutation_module(lam) for lam in partitions(n))
                assert total == dim_permutation_module(mu) * dim_permutation_module(nu)
