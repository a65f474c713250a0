"""Rank vectors of subspace families over prime fields.

A family of subspaces ``U_1, ..., U_n`` of ``F_p^m`` has rank vector
``r_I = dim sum_{i in I} U_i``; ``log2(p) * r`` is an entropy vector, realized
by a uniform linear functional restricted to each subspace.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import howell
from .entropy import EntropyVector, JointDistribution
from .errors import DimensionMismatchError, UnsupportedDimensionError
from .stabilizer import (
    Submodule,
    cardinality,
    prime_factors,
    restrict,
    symplectic_complement,
)
from .subsets import full_mask, parties_of, popcount

Basis = tuple[tuple[int, ...], ...]
WITNESS_MAX_OUTCOMES = 1 << 20


def _is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == [p]


def rref_mod(rows: Sequence[Sequence[int]], p: int, m: int) -> Basis:
    return tuple(tuple(r) for r in howell.howell_form(rows, p, m))


@dataclass(frozen=True)
class SubspaceFamily:
    """Subspaces of ``F_p^m``, each stored as a reduced row echelon basis."""

    p: int
    m: int
    subspaces: tuple[Basis, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise UnsupportedDimensionError(f"{self.p} is not prime")
        canon = []
        for rows in self.subspaces:
            rows = [list(r) for r in rows]
            if any(len(r) != self.m for r in rows):
                raise DimensionMismatchError(f"basis vectors need length {self.m}")
            canon.append(rref_mod(rows, self.p, self.m))
        object.__setattr__(self, "subspaces", tuple(canon))

    @property
    def n(self) -> int:
        return len(self.subspaces)

    def span(self, mask: int) -> Basis:
        rows = [r for i in parties_of(mask) for r in self.subspaces[i - 1]]
        return rref_mod(rows, self.p, self.m)


def rank_vector(fam: SubspaceFamily) -> list[int]:
    """``r_I = dim(sum of U_i for i in I)`` for every subset mask."""
    return [len(fam.span(mask)) for mask in range(1 << fam.n)]


def rank_to_entropy(fam: SubspaceFamily) -> EntropyVector:
    """``log2(p) * rank_vector``."""
    r = rank_vector(fam)
    return EntropyVector(fam.n, np.array(r, dtype=float) * math.log2(fam.p))


def rank_witness(fam: SubspaceFamily) -> JointDistribution | None:
    """Joint distribution realizing :func:`rank_to_entropy`.

    ``x`` is uniform on ``F_p^m`` and party ``i`` sees the values of ``x`` on
    the basis of ``U_i``.  Returns None when the table would be too large.
    """
    p, m = fam.p, fam.m
    dims = tuple(p ** len(U) for U in fam.subspaces)
    if m > 12 or p**m > WITNESS_MAX_OUTCOMES or math.prod(dims) > WITNESS_MAX_OUTCOMES or not dims:
        return None
    table = np.zeros(dims, dtype=object)
    table[...] = Fraction(0)
    weight = Fraction(1, p**m)
    for x in itertools.product(range(p), repeat=m):
        idx = []
        for U in fam.subspaces:
            code = 0
            for b in U:
                code = code * p + sum(a * c for a, c in zip(x, b)) % p
            idx.append(code)
        table[tuple(idx)] += weight
    return JointDistribution(dims, table.reshape(-1), exact=True)


def annihilator(rows: Sequence[Sequence[int]], p: int, m: int) -> Basis:
    """``{y in F_p^m : y . w = 0 for every row w}``."""
    if not rows:
        return rref_mod([[1 if i == j else 0 for j in range(m)] for i in range(m)], p, m)
    cols = [[r[i] for r in rows] for i in range(m)]
    return tuple(tuple(r) for r in howell.left_kernel(cols, p))


def intersect(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], p: int, m: int) -> Basis:
    """Basis of ``span(A) ∩ span(B)`` from the kernel of ``(x, y) -> xA - yB``."""
    if not A or not B:
        return ()
    stacked = [list(a) for a in A] + [[(-x) % p for x in b] for b in B]
    ker = howell.left_kernel(stacked, p)
    vecs = [[sum(k[i] * A[i][j] for i in range(len(A))) % p for j in range(m)] for k in ker]
    return rref_mod(vecs, p, m)


def annihilator_convert(W: Sequence[Sequence[Sequence[int]]], p: int, m: int) -> SubspaceFamily:
    """Family of annihilators ``V_i = W_i^o``, checked against the intersection form.

    For every subset ``I``: ``dim sum V_i = m - dim(intersection of W_i)``.
    """
    Ws = [rref_mod([list(r) for r in w], p, m) for w in W]
    fam = SubspaceFamily(p, m, tuple(annihilator(w, p, m) for w in Ws))
    ident = rref_mod([[1 if i == j else 0 for j in range(m)] for i in range(m)], p, m)
    for mask in range(1, 1 << len(Ws)):
        inter = ident
        for i in parties_of(mask):
            inter = intersect(inter, Ws[i - 1], p, m)
        if len(fam.span(mask)) != m - len(inter):
            raise AssertionError(f"annihilator duality fails on subset mask {mask}")
    return fam


def stabilizer_rank_family(M: Submodule) -> SubspaceFamily:
    """Subspace family whose ranks reproduce the stabilizer entropies of ``M`` (prime ``d``).

    With ``C = M^omega`` and ``K_i = C ∩ V_{[n] \\ {i}}``, party ``i`` gets
    ``U_i = K_i^o`` inside ``C*`` (coordinates in the echelon basis of ``C``).
    Then ``log2(d) * r_I = S(I) + |I| log2 d``, checked exactly as
    ``d^{r_I} |M_I| = d^{2|I|}``.
    """
    d, n = M.d, M.n
    if not _is_prime(d):
        raise UnsupportedDimensionError(f"d={d} is not prime")
    C = symplectic_complement(M)
    basis = C.generators
    piv = [c for c, _ in howell.pivots(basis)]
    k = len(basis)
    subspaces = []
    for i in range(1, n + 1):
        K = restrict(C, full_mask(n) ^ (1 << (i - 1)))
        coords = [[v[c] for c in piv] for v in K.generators]
        subspaces.append(annihilator(coords, d, k))
    fam = SubspaceFamily(d, k, tuple(subspaces))
    r = rank_vector(fam)
    for mask in range(1 << n):
        if d ** r[mask] * cardinality(restrict(M, mask)) != d ** (2 * popcount(mask)):
            raise AssertionError(f"rank identity fails on subset mask {mask}")
    return fam


# --------------------------------------------------------------------------
# family file: "p m n", then per subspace a line "k" followed by k basis rows


def format_family(fam: SubspaceFamily) -> str:
    lines = [f"{fam.p} {fam.m} {fam.n}"]
    for U in fam.subspaces:
        lines.append(str(len(U)))
        lines.extend(" ".join(map(str, r)) for r in U)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> SubspaceFamily:
    lines = [(k, ln.split("#", 1)[0].strip()) for k, ln in enumerate(text.splitlines(), start=1)]
    lines = [(k, ln) for k, ln in lines if ln]
    if not lines:
        raise ValueError("empty family file")
    try:
        p, m, n = (int(x) for x in lines[0][1].split())
    except ValueError:
        raise ValueError(f"line {lines[0][0]}: expected 'p m n'") from None
    pos = 1
    subspaces = []
    for _ in range(n):
        if pos >= len(lines):
            raise ValueError("unexpected end of file")
        lineno, ln = lines[pos]
        try:
            k = int(ln)
        except ValueError:
            raise ValueError(f"line {lineno}: expected a row count") from None
        rows = []
        for lineno, ln in lines[pos + 1: pos + 1 + k]:
            row = [int(x) for x in ln.split()]
            if len(row) != m:
                raise ValueError(f"line {lineno}: expected {m} entries")
            rows.append(row)
        if len(rows) != k:
            raise ValueError("unexpected end of file")
        subspaces.append(tuple(tuple(r) for r in rows))
        pos += 1 + k
    if pos != len(lines):
        raise ValueError(f"line {lines[pos][0]}: trailing content")
    return SubspaceFamily(p, m, tuple(subspaces))
