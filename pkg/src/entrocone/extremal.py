"""Flatness tests and first-order entropy differentials.

A state (or distribution) can only sit on an isolated extremal ray of the
entropy cone if its entropy map is critical there, which forces every
nontrivial reduced spectrum to be flat, or the state to split, or the
entropy vector to be the exceptional ray with all entries equal.  This
module computes the differential and sorts states into those cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .entropy import (
    DensityMatrix,
    JointDistribution,
    PureState,
    entropy_vector_classical,
    entropy_vector_quantum,
    partial_trace,
    spectrum,
    _bipartition_matrix,
)
from .errors import InvalidStateError
from .subsets import SubsetLike, as_mask, full_mask, parties_of, subset_key

FLAT_TOL = 1e-8


class FlatCheck(NamedTuple):
    flat: bool
    levels: int


def is_flat(spec, tol: float = FLAT_TOL) -> FlatCheck:
    """Whether the nonzero entries of ``spec`` all coincide (relative to the largest).

    ``levels`` counts the entries above ``tol * max``.
    """
    s = np.sort(np.asarray(spec, dtype=float).reshape(-1))[::-1]
    if s.size == 0 or s[0] <= 0:
        return FlatCheck(False, 0)
    cut = tol * s[0]
    nz = s[s > cut]
    return FlatCheck(bool(nz[0] - nz[-1] <= cut), int(nz.size))


def _has_repeated_nonzero(spec, tol: float) -> bool:
    s = np.sort(np.asarray(spec, dtype=float))[::-1]
    cut = tol * max(s[0], 1e-300)
    nz = s[s > cut]
    return bool(nz.size > 1 and np.min(np.diff(nz[::-1])) <= cut)


@dataclass
class SchmidtData:
    """``|psi> = sum_a sqrt(p_a) |left_a> ⊗ |right_a>`` across ``subset | complement``.

    ``left`` and ``right`` hold the basis vectors as columns.
    """

    subset: int
    coefficients: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Amplitudes in the ``subset``-first ordering."""
        return (self.left * np.sqrt(self.coefficients)) @ self.right.T


def schmidt_decompose(psi: PureState, subset: SubsetLike) -> SchmidtData:
    """Schmidt decomposition by SVD; squared coefficients descending.

    Each left vector is rephased so that its first significant component
    is real and positive; the matching right vector absorbs the phase.
    """
    mask = as_mask(subset, psi.n)
    U, s, Vh = np.linalg.svd(_bipartition_matrix(psi, mask), full_matrices=False)
    right = Vh.T.copy()
    for k in range(U.shape[1]):
        col = U[:, k]
        idx = int(np.flatnonzero(np.abs(col) > 1e-9)[0])
        ph = col[idx] / abs(col[idx])
        U[:, k] = col / ph
        right[:, k] = right[:, k] * ph
    return SchmidtData(mask, s**2, U, right)


@dataclass
class DifferentialReport:
    """Rows of the entropy differential over a fixed real tangent basis.

    ``matrix[r, c]`` is the derivative of ``S(subsets[r])`` (bits) along
    tangent direction ``c``.  Rows of subsets whose spectrum is degenerate
    but not flat are NaN and listed in ``degenerate``; ``rank`` is None then.
    """

    subsets: list[int]
    matrix: np.ndarray
    rank: int | None
    flat: dict[int, bool]
    degenerate: list[int] = field(default_factory=list)
    tangent: np.ndarray | None = field(default=None, repr=False)
    verdict: "Verdict | None" = None

    def to_json_obj(self) -> dict:
        rows = {
            subset_key(m): [None if np.isnan(x) else float(x) for x in self.matrix[r]]
            for r, m in enumerate(self.subsets)
        }
        obj = {
            "rows": rows,
            "rank": self.rank,
            "flat": {subset_key(m): bool(v) for m, v in self.flat.items()},
            "degenerate": [subset_key(m) for m in self.degenerate],
            "tangent_dimension": int(self.matrix.shape[1]),
        }
        if self.verdict is not None:
            obj["verdict"] = self.verdict.to_json_obj()
        return obj


def tangent_basis(psi: PureState) -> np.ndarray:
    """Real orthonormal basis of the tangent space of the projective space at ``psi``.

    Columns are ``u_k`` and ``i u_k`` for an orthonormal basis ``u_k`` of the
    complement of ``psi`` obtained from a QR factorization of ``[psi | 1]``;
    ``2 (D - 1)`` directions in total.
    """
    v = psi.amplitudes
    D = v.size
    Q, _ = np.linalg.qr(np.column_stack([v, np.eye(D, dtype=complex)]))
    U = Q[:, 1:D]
    U = U - np.outer(v, v.conj() @ U)
    return np.column_stack([U, 1j * U])


def directional_derivative(psi: PureState, subset: SubsetLike, phi: np.ndarray) -> float:
    """``d/dt S(I)`` at ``t = 0`` along ``psi + t phi`` with ``phi ⊥ psi``.

    Equals ``-2 Re tr(log2(rho_I) Phi Psi^dagger)`` with the logarithm taken on
    the support of ``rho_I``.
    """
    mask = as_mask(subset, psi.n)
    Psi = _bipartition_matrix(psi, mask)
    Phi = _reshape_like(psi, phi, mask)
    rho = Psi @ Psi.conj().T
    w, V = np.linalg.eigh((rho + rho.conj().T) / 2)
    keep = w > 1e-14
    L = (V[:, keep] * np.log2(w[keep])) @ V[:, keep].conj().T
    return float(-2 * np.real(np.trace(L @ Phi @ Psi.conj().T)))


def _reshape_like(psi: PureState, vec: np.ndarray, mask: int) -> np.ndarray:
    n = psi.n
    keep = [i - 1 for i in parties_of(mask)]
    rest = [i for i in range(n) if i not in keep]
    t = np.asarray(vec, dtype=complex).reshape(psi.local_dims).transpose(keep + rest)
    dk = int(np.prod([psi.local_dims[i] for i in keep])) if keep else 1
    return t.reshape(dk, -1)


def entropy_differential(psi: PureState, tol: float = FLAT_TOL) -> DifferentialReport:
    """Differential of ``S(I)`` for every proper nonempty ``I`` over :func:`tangent_basis`."""
    if abs(np.linalg.norm(psi.amplitudes) - 1) > 1e-10:
        raise InvalidStateError("state is not normalized")
    n = psi.n
    subsets = list(range(1, full_mask(n)))
    T = tangent_basis(psi)
    M = np.zeros((len(subsets), T.shape[1]))
    flat, degenerate = {}, []
    for r, m in enumerate(subsets):
        spec = np.linalg.svd(_bipartition_matrix(psi, m), compute_uv=False) ** 2
        fl = is_flat(spec, tol).flat
        flat[m] = fl
        if not fl and _has_repeated_nonzero(spec, 1e-6):
            degenerate.append(m)
            M[r] = np.nan
            continue
        for c in range(T.shape[1]):
            M[r, c] = directional_derivative(psi, m, T[:, c])
    rank = None if degenerate else _numerical_rank(M)
    return DifferentialReport(subsets, M, rank, flat, degenerate, T)


def _numerical_rank(M: np.ndarray, tol: float = 1e-8) -> int:
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0])))


def _entropy_along(psi: PureState, mask: int, phi: np.ndarray, t: float) -> float:
    v = psi.amplitudes + t * phi
    v = v / np.linalg.norm(v)
    s = np.linalg.svd(_reshape_like(psi, v, mask), compute_uv=False) ** 2
    s = s[s > 0]
    return float(-(s * np.log2(s)).sum())


def finite_difference_differential(psi: PureState, step: float = 1e-5) -> np.ndarray:
    """Central differences of every ``S(I)`` along the same tangent basis."""
    n = psi.n
    T = tangent_basis(psi)
    subsets = list(range(1, full_mask(n)))
    M = np.zeros((len(subsets), T.shape[1]))
    for r, m in enumerate(subsets):
        for c in range(T.shape[1]):
            phi = T[:, c]
            M[r, c] = (_entropy_along(psi, m, phi, step) - _entropy_along(psi, m, phi, -step)) / (2 * step)
    return M


# --------------------------------------------------------------------------
# classification


@dataclass
class Verdict:
    """Which necessary condition for an isolated extremal ray the state meets.

    ``code`` is 1 (splits: some nontrivial entropy vanishes), 2 (exceptional
    ray: all entropies equal ``r``), 3 (all spectra flat) or 0 (none of these).
    """

    code: int
    label: str
    witness: object = None

    def to_json_obj(self) -> dict:
        w = self.witness
        if isinstance(w, (int, np.integer)) and self.code in (0, 1):
            w = subset_key(int(w))
        elif isinstance(w, (float, np.floating)):
            w = float(w)
        return {"code": self.code, "label": self.label, "witness": w}


SPLITS = "splits"
EXCEPTIONAL = "exceptional-ray"
ALL_FLAT = "all-flat"
NOT_CANDIDATE = "not-extremal-candidate"


def _classify(entries: np.ndarray, spectra: dict[int, np.ndarray], nontrivial: list[int], tol: float) -> Verdict:
    for m in nontrivial:
        if entries[m] <= tol:
            return Verdict(1, SPLITS, m)
    not_flat = [m for m in nontrivial if not is_flat(spectra[m], tol).flat]
    if not not_flat:
        return Verdict(3, ALL_FLAT)
    vals = entries[nontrivial]
    if np.max(vals) - np.min(vals) <= tol * max(1.0, abs(vals[0])):
        return Verdict(2, EXCEPTIONAL, float(vals[0]))
    return Verdict(0, NOT_CANDIDATE, not_flat[0])


def classify_quantum(rho: DensityMatrix | PureState, tol: float = FLAT_TOL) -> Verdict:
    """Sort a state into the splits / exceptional-ray / all-flat / other cases.

    For a pure state the nontrivial subsets are the proper nonempty ones;
    otherwise every nonempty subset counts.
    """
    if isinstance(rho, PureState):
        rho = rho.density()
    n = rho.n
    full = full_mask(n)
    ev = spectrum(rho)
    pure = is_flat(ev, tol) == (True, 1)
    nontrivial = list(range(1, full)) if pure else list(range(1, full + 1))
    spectra = {m: spectrum(partial_trace(rho, m)) for m in nontrivial}
    entries = entropy_vector_quantum(rho).entries
    return _classify(entries, spectra, nontrivial, tol)


def supporting_space(p: JointDistribution) -> np.ndarray:
    """Basis ``e_{x0} - e_y`` (columns) of the directions keeping the support of ``p``."""
    flat = p.as_float().reshape(-1)
    supp = np.flatnonzero(flat > 0)
    B = np.zeros((flat.size, max(supp.size - 1, 0)))
    for c, y in enumerate(supp[1:]):
        B[supp[0], c] = 1.0
        B[y, c] = -1.0
    return B


def classical_differential(p: JointDistribution) -> DifferentialReport:
    """``(dH_I)(e_x - e_y) = log2(p_I(y_I) / p_I(x_I))`` over :func:`supporting_space`."""
    n = p.n
    table = p.as_float()
    flatp = table.reshape(-1)
    supp = np.flatnonzero(flatp > 0)
    idx = np.array(np.unravel_index(supp, p.dims)).T
    subsets = list(range(1, full_mask(n) + 1))
    M = np.zeros((len(subsets), max(supp.size - 1, 0)))
    flat = {}
    for r, m in enumerate(subsets):
        keep = [i - 1 for i in parties_of(m)]
        drop = tuple(ax for ax in range(n) if ax not in keep)
        marg = table.sum(axis=drop) if drop else table
        flat[m] = is_flat(marg.reshape(-1)).flat
        px = marg[tuple(idx[0][keep])]
        for c, y in enumerate(idx[1:]):
            M[r, c] = np.log2(marg[tuple(y[keep])] / px)
    B = supporting_space(p)
    return DifferentialReport(subsets, M, _numerical_rank(M), flat, [], B)


def classify_classical(p: JointDistribution, tol: float = FLAT_TOL) -> Verdict:
    """Classical analogue of :func:`classify_quantum` with flat marginals."""
    n = p.n
    table = p.as_float()
    nontrivial = list(range(1, full_mask(n) + 1))
    spectra = {}
    for m in nontrivial:
        keep = [i - 1 for i in parties_of(m)]
        drop = tuple(ax for ax in range(n) if ax not in keep)
        spectra[m] = (table.sum(axis=drop) if drop else table).reshape(-1)
    entries = entropy_vector_classical(p).entries
    return _classify(entries, spectra, nontrivial, tol)
