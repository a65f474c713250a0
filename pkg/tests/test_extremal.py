import numpy as np
import pytest
from hypothesis import given, strategies as st

from entrocone.entropy import (
    DensityMatrix,
    JointDistribution,
    PureState,
    correlated_distribution,
    entropy_vector_quantum,
    ghz_state,
    partial_trace,
    _bipartition_matrix,
)
from entrocone.errors import InvalidStateError
from entrocone.extremal import (
    classical_differential,
    classify_classical,
    classify_quantum,
    directional_derivative,
    entropy_differential,
    finite_difference_differential,
    is_flat,
    schmidt_decompose,
    tangent_basis,
)

from helpers import random_density, random_pure


def test_flatness():
    assert is_flat([0.5, 0.5, 0, 0]) == (True, 2)
    assert is_flat([0.7, 0.3]) == (False, 2)
    assert is_flat([1.0]) == (True, 1)
    assert is_flat([0.5, 0.5 + 1e-12]).flat


def test_tangent_basis_is_orthonormal(rng):
    psi = PureState((2, 2), random_pure(rng, (2, 2)))
    T = tangent_basis(psi)
    assert T.shape == (4, 6)
    gram = np.real(T.conj().T @ T)
    assert np.allclose(gram, np.eye(6), atol=1e-12)
    assert np.allclose(psi.amplitudes.conj() @ T, 0, atol=1e-12)


def test_directional_derivative_example():
    # |psi> = sqrt(2/3)|00> + sqrt(1/3)|11>, phi = sqrt(1/3)|00> - sqrt(2/3)|11>
    psi = PureState((2, 2), np.array([np.sqrt(2 / 3), 0, 0, np.sqrt(1 / 3)]))
    phi = np.array([np.sqrt(1 / 3), 0, 0, -np.sqrt(2 / 3)])
    assert directional_derivative(psi, {1}, phi) == pytest.approx(-2 * np.sqrt(2) / 3, abs=1e-9)


@given(st.integers(0, 10_000))
def test_differential_matches_finite_differences(seed):
    rng = np.random.default_rng(seed)
    psi = PureState((2, 2, 2), random_pure(rng, (2, 2, 2)))
    rep = entropy_differential(psi)
    fd = finite_difference_differential(psi)
    scale = max(1.0, np.abs(fd).max())
    assert np.abs(rep.matrix - fd).max() <= 1e-5 * scale


def test_differential_of_mixed_dimensions(rng):
    psi = PureState((2, 3), random_pure(rng, (2, 3)))
    rep = entropy_differential(psi)
    assert rep.matrix.shape == (2, 10)
    assert np.allclose(rep.matrix[0], rep.matrix[1], atol=1e-9)


def test_ghz_is_critical_and_flat():
    rep = entropy_differential(ghz_state(3))
    assert np.abs(rep.matrix).max() <= 1e-8
    assert all(rep.flat.values())
    assert classify_quantum(ghz_state(3)).label == "all-flat"


def test_flat_implies_critical(rng):
    # maximally entangled across 1|23 with flat two-party marginals
    psi = np.zeros(8)
    psi[[0, 7]] = 1 / np.sqrt(2)
    rep = entropy_differential(PureState((2, 2, 2), psi))
    for r, m in enumerate(rep.subsets):
        if rep.flat[m]:
            assert np.abs(rep.matrix[r]).max() <= 1e-8


def test_degenerate_rows_are_flagged():
    # spectrum of party 1 is (0.5, 0.25, 0.25): repeated but not flat
    amps = np.zeros(9)
    amps[0] = np.sqrt(0.5)
    amps[4] = np.sqrt(0.25)
    amps[8] = np.sqrt(0.25)
    rep = entropy_differential(PureState((3, 3), amps))
    assert rep.degenerate == [1, 2]
    assert rep.rank is None
    assert np.isnan(rep.matrix).all()


def test_unnormalized_state_is_rejected():
    psi = PureState((2,), np.array([1.0, 0.0]))
    psi.amplitudes = np.array([1.0, 1.0], dtype=complex)
    with pytest.raises(InvalidStateError):
        entropy_differential(psi)


def test_schmidt_reconstructs(rng):
    psi = PureState((2, 3, 2), random_pure(rng, (2, 3, 2)))
    for mask in range(1, 7):
        data = schmidt_decompose(psi, mask)
        assert np.isclose(data.coefficients.sum(), 1.0)
        rho = partial_trace(psi, mask).matrix
        assert np.allclose(np.sort(np.linalg.eigvalsh(rho))[::-1][: data.coefficients.size], data.coefficients, atol=1e-10)
    data = schmidt_decompose(psi, 0b101)
    assert np.allclose(data.reconstruct(), _bipartition_matrix(psi, 0b101), atol=1e-10)


def test_quantum_verdicts(rng):
    prod = PureState((2, 2), np.kron([1, 0], random_pure(rng, (2,))))
    assert classify_quantum(prod).label == "splits"
    mixed = DensityMatrix((2, 2), random_density(rng, (2, 2)))
    assert classify_quantum(mixed).label == "not-extremal-candidate"
    assert classify_quantum(ghz_state(4)).label == "all-flat"


def test_exceptional_ray_verdict():
    # a single non-flat party: its only entropy trivially equals itself
    rho = np.diag([0.7, 0.3])
    v = classify_quantum(DensityMatrix((2,), rho))
    assert v.label == "exceptional-ray"
    assert v.witness == pytest.approx(entropy_vector_quantum(DensityMatrix((2,), rho)).entries[1])


def test_classical_differential_and_verdicts():
    p = correlated_distribution({1, 2, 3}, 3)
    rep = classical_differential(p)
    assert np.abs(rep.matrix).max() == 0
    assert classify_classical(p).label == "all-flat"
    q = JointDistribution((2,), [2 / 3, 1 / 3])
    rep = classical_differential(q)
    assert rep.matrix[0, 0] == pytest.approx(-1.0)
    assert classify_classical(q).label == "exceptional-ray"
    r = JointDistribution((2, 2), [0.5, 0.5, 0, 0])
    assert classify_classical(r).label == "splits"


@pytest.mark.parametrize("seed", range(20))
def test_classical_criticality_iff_flat(seed):
    rng = np.random.default_rng(seed)
    support = rng.choice(4, size=int(rng.integers(1, 5)), replace=False)
    p = np.zeros(4)
    if seed % 2:
        p[support] = 1 / support.size
    else:
        p[support] = rng.dirichlet(np.ones(support.size))
    rep = classical_differential(JointDistribution((2, 2), p))
    critical = rep.matrix.size == 0 or np.abs(rep.matrix).max() <= 1e-9
    assert critical == all(rep.flat.values())
