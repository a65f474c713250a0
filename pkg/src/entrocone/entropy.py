"""Shannon and von Neumann entropy vectors, plus the dense quantum oracle.

All entropies are in bits.  Entropy vectors are indexed by subset bitmasks
(see :mod:`entrocone.subsets`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidDistributionError,
    InvalidStateError,
    NotIsotropicError,
    PhaseSearchError,
    ResourceLimitError,
)
from .subsets import (
    SubsetLike,
    as_mask,
    parse_subset_key,
    parties_of,
    subset_key,
)

HERMITIAN_TOL = 1e-10
EIGEN_CLAMP = 1e-10
FLOAT_NORM_TOL = 1e-12
DENSE_CAP = 256


def _xlogx_bits(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum()) + 0.0


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


# --------------------------------------------------------------------------
# classical


@dataclass(eq=False)
class JointDistribution:
    """Joint distribution of ``n`` discrete random variables.

    ``probs`` is a dense table of shape ``dims`` (last party fastest when
    flattened).  With ``exact=True`` the entries are :class:`fractions.Fraction`
    and every marginal is computed exactly.
    """

    dims: tuple[int, ...]
    probs: np.ndarray
    exact: bool = False

    def __post_init__(self):
        self.dims = tuple(int(d) for d in self.dims)
        if not self.dims or any(d < 1 for d in self.dims):
            raise InvalidDistributionError(f"alphabet sizes must be positive, got {self.dims}")
        size = int(np.prod(self.dims))
        flat = np.asarray(self.probs, dtype=object if self.exact else float).reshape(-1)
        if flat.size != size:
            raise InvalidDistributionError(
                f"table has {flat.size} entries, expected {size} for dims {self.dims}"
            )
        if self.exact:
            flat = np.array([_to_fraction(x) for x in flat], dtype=object)
            if any(x < 0 for x in flat):
                raise InvalidDistributionError("negative probability")
            if sum(flat, Fraction(0)) != 1:
                raise InvalidDistributionError("probabilities do not sum to 1")
        else:
            if np.any(~np.isfinite(flat)) or np.any(flat < 0):
                raise InvalidDistributionError("negative or non-finite probability")
            if abs(flat.sum() - 1.0) > FLOAT_NORM_TOL:
                raise InvalidDistributionError(f"probabilities sum to {flat.sum()!r}, not 1")
        self.probs = flat.reshape(self.dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @classmethod
    def from_table(cls, probs, dims: Sequence[int] | None = None) -> "JointDistribution":
        """Build from a (nested or flat) table; exact mode when every entry is rational."""
        arr = np.asarray(probs, dtype=object)
        if dims is None:
            dims = arr.shape
        flat = arr.reshape(-1)
        exact = all(isinstance(x, (Fraction, int, np.integer, str)) for x in flat)
        return cls(tuple(dims), flat, exact=exact)

    def as_float(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    def to_json_obj(self) -> dict:
        flat = self.probs.reshape(-1)
        probs = [str(x) for x in flat] if self.exact else [float(x) for x in flat]
        return {"n": self.n, "dims": list(self.dims), "probs": probs}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "JointDistribution":
        dims = [int(d) for d in obj["dims"]]
        if "n" in obj and int(obj["n"]) != len(dims):
            raise InvalidDistributionError("field 'n' disagrees with 'dims'")
        probs = obj["probs"]
        exact = all(isinstance(x, (str, int)) and not isinstance(x, bool) for x in probs)
        return cls(tuple(dims), np.array(probs, dtype=object), exact=exact)


def shannon_entropy(p, tol: float = 1e-10) -> float:
    """Shannon entropy in bits, with ``0 log 0 = 0``.

    Accepts floats or exact rationals; the sum must be 1 within ``tol``
    (exactly 1 for rationals).
    """
    arr = np.asarray(p, dtype=object).reshape(-1)
    if arr.size and all(isinstance(x, (Fraction, int, np.integer)) for x in arr):
        if any(x < 0 for x in arr) or sum(arr, Fraction(0)) != 1:
            raise InvalidDistributionError("not a probability vector")
    arr = arr.astype(float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0) or abs(arr.sum() - 1.0) > tol:
        raise InvalidDistributionError("not a probability vector")
    return max(_xlogx_bits(arr), 0.0)


def marginalize(joint: JointDistribution, subset: SubsetLike) -> JointDistribution:
    """Marginal distribution of the parties in ``subset`` (kept in increasing order).

    The empty subset yields the trivial one-outcome distribution.
    """
    mask = as_mask(subset, joint.n)
    keep = [i - 1 for i in parties_of(mask)]
    drop = tuple(ax for ax in range(joint.n) if ax not in keep)
    table = joint.probs.sum(axis=drop) if drop else joint.probs
    if not keep:
        return JointDistribution((1,), np.array([table], dtype=object if joint.exact else float).reshape(1), joint.exact)
    return JointDistribution(tuple(joint.dims[i] for i in keep), np.asarray(table).reshape(-1), joint.exact)


@dataclass(eq=False)
class EntropyVector:
    """Point of entropy space: ``2**n`` entries in bits, entry 0 (empty set) is 0."""

    n: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=float).reshape(-1)
        if self.entries.size != 1 << self.n:
            raise DimensionMismatchError(f"expected {1 << self.n} entries, got {self.entries.size}")
        if self.entries[0] != 0:
            raise InvalidStateError("entropy of the empty set must be exactly 0")

    def __getitem__(self, subset: SubsetLike) -> float:
        return float(self.entries[as_mask(subset, self.n)])

    def __add__(self, other: "EntropyVector") -> "EntropyVector":
        if other.n != self.n:
            raise DimensionMismatchError("entropy vectors live in different spaces")
        return EntropyVector(self.n, self.entries + other.entries)

    def __mul__(self, c: float) -> "EntropyVector":
        return EntropyVector(self.n, self.entries * c)

    __rmul__ = __mul__

    def allclose(self, other, atol: float = 1e-9) -> bool:
        other = other.entries if isinstance(other, EntropyVector) else np.asarray(other, float)
        return bool(np.allclose(self.entries, other, rtol=0, atol=atol))

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "entries": {subset_key(m): float(self.entries[m]) for m in range(1 << self.n)},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EntropyVector":
        n = int(obj["n"])
        entries = np.zeros(1 << n)
        for key, val in obj["entries"].items():
            entries[as_mask(parse_subset_key(key), n)] = float(val)
        return cls(n, entries)

    def __repr__(self):
        body = ", ".join(f"{subset_key(m) or '-'}: {self.entries[m]:.6g}" for m in range(1, 1 << self.n))
        return f"EntropyVector(n={self.n}; {body})"


def entropy_vector_classical(joint: JointDistribution) -> EntropyVector:
    """Entropy vector ``H(X_I)`` for every subset ``I`` of the parties."""
    n = joint.n
    entries = np.zeros(1 << n)
    table = joint.as_float()
    for mask in range(1, 1 << n):
        keep = [i - 1 for i in parties_of(mask)]
        drop = tuple(ax for ax in range(n) if ax not in keep)
        marg = table.sum(axis=drop) if drop else table
        entries[mask] = max(_xlogx_bits(np.asarray(marg).reshape(-1)), 0.0)
    return EntropyVector(n, entries)


def correlated_distribution(subset: SubsetLike, n: int) -> JointDistribution:
    """Parties in ``subset`` all equal one fair coin; the others are constant."""
    mask = as_mask(subset, n)
    probs = np.full((2,) * n, Fraction(0), dtype=object)
    for bit in (0, 1):
        idx = tuple(bit if mask >> i & 1 else 0 for i in range(n))
        probs[idx] += Fraction(1, 2)
    return JointDistribution((2,) * n, probs.reshape(-1), exact=True)


# --------------------------------------------------------------------------
# quantum


@dataclass(eq=False)
class DensityMatrix:
    local_dims: tuple[int, ...]
    matrix: np.ndarray = field(repr=False)
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        self.local_dims = tuple(int(d) for d in self.local_dims)
        self.matrix = np.asarray(self.matrix, dtype=complex)
        D = int(np.prod(self.local_dims)) if self.local_dims else 1
        if self.matrix.shape != (D, D):
            raise DimensionMismatchError(
                f"matrix shape {self.matrix.shape} does not match local dims {self.local_dims}"
            )
        if self.validate:
            dev = np.abs(self.matrix - self.matrix.conj().T).max() if D else 0.0
            if dev > HERMITIAN_TOL:
                raise InvalidStateError(f"matrix is not Hermitian (deviation {dev:.3g})")
            if abs(np.trace(self.matrix) - 1) > HERMITIAN_TOL:
                raise InvalidStateError("trace is not 1")
            if np.linalg.eigvalsh(self.matrix).min() < -EIGEN_CLAMP:
                raise InvalidStateError("matrix is not positive semidefinite")

    @property
    def n(self) -> int:
        return len(self.local_dims)

    def to_json_obj(self) -> dict:
        return {
            "dims": list(self.local_dims),
            "re": self.matrix.real.tolist(),
            "im": self.matrix.imag.tolist(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DensityMatrix":
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
        return cls(tuple(obj["dims"]), re + 1j * im)


@dataclass(eq=False)
class PureState:
    local_dims: tuple[int, ...]
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.local_dims = tuple(int(d) for d in self.local_dims)
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.amplitudes.size != int(np.prod(self.local_dims)):
            raise DimensionMismatchError("amplitude vector does not match local dims")
        if abs(np.vdot(self.amplitudes, self.amplitudes).real - 1) > 1e-12:
            raise InvalidStateError("state is not normalized")

    @property
    def n(self) -> int:
        return len(self.local_dims)

    def density(self) -> DensityMatrix:
        psi = self.amplitudes
        return DensityMatrix(self.local_dims, np.outer(psi, psi.conj()), validate=False)


def diagonal_embedding(joint: JointDistribution) -> DensityMatrix:
    """Classical distribution as a diagonal density matrix."""
    return DensityMatrix(joint.dims, np.diag(joint.as_float().reshape(-1)).astype(complex))


def product_state(*states: DensityMatrix) -> DensityMatrix:
    """Plain tensor product; parties are concatenated."""
    dims: tuple[int, ...] = ()
    mat = np.ones((1, 1), dtype=complex)
    for s in states:
        dims += s.local_dims
        mat = np.kron(mat, s.matrix)
    return DensityMatrix(dims, mat, validate=False)


def tensor_pairwise(rho: DensityMatrix, sigma: DensityMatrix) -> DensityMatrix:
    """``rho ⊗ sigma`` with party ``i`` holding the factors ``rho_i`` and ``sigma_i``."""
    if rho.n != sigma.n:
        raise DimensionMismatchError("both states need the same number of parties")
    n = rho.n
    big = np.kron(rho.matrix, sigma.matrix)
    dims = rho.local_dims + sigma.local_dims
    t = big.reshape(dims + dims)
    order = [x for i in range(n) for x in (i, n + i)]
    t = t.transpose(order + [2 * n + k for k in order])
    new_dims = tuple(rho.local_dims[i] * sigma.local_dims[i] for i in range(n))
    D = int(np.prod(new_dims))
    return DensityMatrix(new_dims, t.reshape(D, D), validate=False)


def _bipartition_matrix(psi: PureState, mask: int) -> np.ndarray:
    n = psi.n
    keep = [i - 1 for i in parties_of(mask)]
    rest = [i for i in range(n) if i not in keep]
    t = psi.amplitudes.reshape(psi.local_dims).transpose(keep + rest)
    dk = int(np.prod([psi.local_dims[i] for i in keep])) if keep else 1
    return t.reshape(dk, -1)


def partial_trace(rho: DensityMatrix | PureState, subset: SubsetLike) -> DensityMatrix:
    """Reduced state on the parties in ``subset``; the complement is traced out."""
    if isinstance(rho, PureState):
        m = _bipartition_matrix(rho, as_mask(subset, rho.n))
        keep = parties_of(as_mask(subset, rho.n))
        return DensityMatrix(tuple(rho.local_dims[i - 1] for i in keep), m @ m.conj().T, validate=False)
    n = rho.n
    mask = as_mask(subset, n)
    keep = [i - 1 for i in parties_of(mask)]
    rest = [i for i in range(n) if i not in keep]
    dims = rho.local_dims
    dk = int(np.prod([dims[i] for i in keep])) if keep else 1
    dr = int(np.prod([dims[i] for i in rest])) if rest else 1
    t = rho.matrix.reshape(dims + dims).transpose(keep + rest + [n + i for i in keep] + [n + i for i in rest])
    reduced = np.einsum("ajbj->ab", t.reshape(dk, dr, dk, dr))
    return DensityMatrix(tuple(dims[i] for i in keep), reduced, validate=False)


def spectrum(rho: DensityMatrix | np.ndarray) -> np.ndarray:
    """Eigenvalues, descending, with small negatives clamped to zero."""
    mat = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    dev = np.abs(mat - mat.conj().T).max() if mat.size else 0.0
    if dev > HERMITIAN_TOL:
        raise InvalidStateError(f"matrix is not Hermitian (deviation {dev:.3g})")
    ev = np.linalg.eigvalsh((mat + mat.conj().T) / 2)[::-1]
    if ev.size and ev.min() < -EIGEN_CLAMP:
        raise InvalidStateError("matrix has a negative eigenvalue")
    return np.clip(ev, 0.0, None)


def von_neumann_entropy(rho: DensityMatrix | np.ndarray) -> float:
    return max(_xlogx_bits(spectrum(rho)), 0.0)


def schmidt_spectrum(psi: PureState, subset: SubsetLike) -> np.ndarray:
    """Squared Schmidt coefficients across ``subset | complement``, descending."""
    s = np.linalg.svd(_bipartition_matrix(psi, as_mask(subset, psi.n)), compute_uv=False)
    return s**2


def entropy_vector_quantum(state: DensityMatrix | PureState) -> EntropyVector:
    """``S(rho_I)`` for every subset ``I``."""
    n = state.n
    entries = np.zeros(1 << n)
    for mask in range(1, 1 << n):
        if isinstance(state, PureState):
            entries[mask] = max(_xlogx_bits(schmidt_spectrum(state, mask)), 0.0)
        else:
            entries[mask] = von_neumann_entropy(partial_trace(state, mask))
    return EntropyVector(n, entries)


def _phase_fix(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    if nz.size:
        v = v * (abs(v[nz[0]]) / v[nz[0]])
    return v


def purify(rho: DensityMatrix) -> PureState:
    """Canonical purification ``sum_i sqrt(p_i) |e_i> ⊗ |i>``.

    The purifying system is appended as party ``n + 1`` of dimension ``D``.
    Eigenvectors are sorted by descending eigenvalue; ties are broken by
    descending lexicographic order of the phase-fixed components.
    """
    D = rho.matrix.shape[0]
    w, V = np.linalg.eigh(rho.matrix)
    cols = [_phase_fix(V[:, k]) for k in range(D)]

    def key(k):
        comps = tuple(x for c in cols[k] for x in (round(c.real, 10), round(c.imag, 10)))
        return (round(float(w[k]), 10), comps)

    order = sorted(range(D), key=key, reverse=True)
    psi = np.zeros((D, D), dtype=complex)
    for j, k in enumerate(order):
        psi[:, j] = np.sqrt(max(w[k], 0.0)) * cols[k]
    psi = psi.reshape(-1)
    psi /= np.linalg.norm(psi)
    return PureState(rho.local_dims + (D,), psi)


def ghz_state(n: int, d: int = 2) -> PureState:
    """``(1/sqrt d) sum_j |j...j>`` on ``n`` parties of dimension ``d``."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    psi = np.zeros(d**n, dtype=complex)
    step = sum(d**k for k in range(n))
    psi[[j * step for j in range(d)]] = 1 / np.sqrt(d)
    return PureState((d,) * n, psi)


# --------------------------------------------------------------------------
# Weyl operators and stabilizer states


def _tau_exponent(d: int, y: int) -> int:
    """``tau_{2d}(y) = exp(i pi k / d)`` with ``k`` returned mod ``2d``."""
    return ((d * d + 1) * y) % (2 * d)


def _site_weyl(d: int, P: int, Q: int) -> np.ndarray:
    P %= d
    Q %= d
    W = np.zeros((d, d), dtype=complex)
    pre = np.exp(1j * np.pi * _tau_exponent(d, -P * Q) / d)
    for x in range(d):
        W[x, (x - Q) % d] = pre * np.exp(2j * np.pi * P * x / d)
    return W


def weyl_operator(d: int, v: Sequence[int]) -> np.ndarray:
    """Dense Weyl operator ``w(v)`` for ``v = (p_1..p_n, q_1..q_n)`` in ``Z_d^{2n}``.

    Each site carries ``(W(P,Q) psi)(x) = tau_{2d}(-PQ) chi_d(Px) psi(x-Q)`` with
    ``P, Q`` the representatives in ``{0, ..., d-1}``.
    """
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    v = [int(x) for x in v]
    if len(v) % 2:
        raise DimensionMismatchError("phase-space vector must have even length")
    n = len(v) // 2
    out = np.ones((1, 1), dtype=complex)
    for i in range(n):
        out = np.kron(out, _site_weyl(d, v[i], v[n + i]))
    return out


def symplectic_product(v: Sequence[int], w: Sequence[int], d: int) -> int:
    n = len(v) // 2
    return sum(v[i] * w[n + i] - v[n + i] * w[i] for i in range(n)) % d


class _Monomial:
    """Weyl-group element stored as ``(psi)(x) -> phase(x) psi(x - shift)``."""

    __slots__ = ("shift", "phase")

    def __init__(self, shift: np.ndarray, phase: np.ndarray):
        self.shift = shift
        self.phase = phase


class _ConfigSpace:
    def __init__(self, d: int, n: int):
        self.d, self.n = d, n
        self.coords = np.array(list(itertools.product(range(d), repeat=n)), dtype=np.int64).reshape(-1, n)
        self.radix = d ** np.arange(n - 1, -1, -1, dtype=np.int64)

    def shifted(self, q: np.ndarray) -> np.ndarray:
        return ((self.coords - q) % self.d) @ self.radix

    def weyl(self, v: Sequence[int]) -> _Monomial:
        d, n = self.d, self.n
        p = np.array(v[:n], dtype=np.int64) % d
        q = np.array(v[n:], dtype=np.int64) % d
        k = sum(_tau_exponent(d, -int(p[i]) * int(q[i])) for i in range(n)) % (2 * d)
        phase = np.exp(1j * np.pi * k / d) * np.exp(2j * np.pi * (self.coords @ p) / d)
        return _Monomial(q, phase)

    def mul(self, a: _Monomial, b: _Monomial) -> _Monomial:
        return _Monomial((a.shift + b.shift) % self.d, a.phase * b.phase[self.shifted(a.shift)])


def _stabilizer_group(space: _ConfigSpace, gens, coeffs, expected: int):
    d = space.d
    ident = _Monomial(np.zeros(space.n, dtype=np.int64), np.ones(space.d**space.n, dtype=complex))
    elems = {tuple([0] * (2 * space.n)): ident}
    gm = [(tuple(g), _Monomial(m.shift, m.phase * c)) for g, m, c in
          ((g, space.weyl(g), c) for g, c in zip(gens, coeffs))]
    frontier = [tuple([0] * (2 * space.n))]
    while frontier:
        nxt = []
        for key in frontier:
            e = elems[key]
            for gkey, g in gm:
                k2 = tuple((a + b) % d for a, b in zip(key, gkey))
                prod = space.mul(e, g)
                if k2 in elems:
                    if not np.allclose(elems[k2].phase, prod.phase, atol=1e-9):
                        return None
                else:
                    elems[k2] = prod
                    nxt.append(k2)
        frontier = nxt
        if len(elems) > expected:
            return None
    return elems


def stabilizer_state_dense(module, max_dim: int = DENSE_CAP) -> DensityMatrix:
    """Dense stabilizer state ``d^{-n} sum_{g in G} g`` for an isotropic submodule.

    ``module`` needs attributes ``d``, ``n``, ``generators`` and a ``cardinality()``
    method (see :class:`entrocone.stabilizer.Submodule`).  For odd ``d`` all
    phases are 1; for even ``d`` generator phases in ``{1, i, -1, -i}`` are
    searched until the sum is a valid normalized projector.
    """
    d, n = module.d, module.n
    D = d**n
    if D > max_dim:
        raise ResourceLimitError(f"d^n = {D} exceeds the dense cap {max_dim}")
    gens = [tuple(int(x) % d for x in g) for g in module.generators]
    for i, j in itertools.combinations(range(len(gens)), 2):
        if symplectic_product(gens[i], gens[j], d):
            raise NotIsotropicError(f"generators {i} and {j} do not commute", pair=(i, j))
    size = int(module.cardinality())
    space = _ConfigSpace(d, n)
    roots = [1] if d % 2 else [1, 1j, -1, -1j]
    for coeffs in itertools.product(roots, repeat=len(gens)):
        elems = _stabilizer_group(space, gens, coeffs, size)
        if elems is None or len(elems) != size:
            continue
        rho = np.zeros((D, D), dtype=complex)
        rows = np.arange(D)
        for m in elems.values():
            rho[rows, space.shifted(m.shift)] += m.phase
        rho /= D
        if np.abs(rho @ rho - rho * (size / D)).max() > 1e-9:
            continue
        if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < -1e-9:
            continue
        return DensityMatrix((d,) * n, rho, validate=False)
    raise PhaseSearchError(f"no consistent phase assignment found for d={d}, {len(gens)} generators")
