"""Exact rational geometry of entropy space.

Cones live in ``Q^k`` and are handled with integers and
:class:`fractions.Fraction` only.  Entropy space on ``n`` parties uses the
reduced coordinates ``k = 2**n - 1`` (subset masks ``1 .. 2**n - 1``), since
the coordinate of the empty set is identically zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .entropy import EntropyVector
from .errors import DimensionMismatchError, RefutationError, ResourceLimitError
from .subsets import (
    SubsetLike,
    as_mask,
    full_mask,
    parse_subset_key,
    parties_of,
    popcount,
    submasks,
    subset_key,
)

DD_MAX_DIM = 16
FLOAT_TOL = 1e-8

Rational = Fraction | int


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float) and x.is_integer():
        return Fraction(int(x))
    raise TypeError(f"not an exact rational: {x!r}")


# --------------------------------------------------------------------------
# exact linear algebra


def primitive(v: Sequence[Rational]) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer entries."""
    fr = [_frac(x) for x in v]
    den = math.lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows: Iterable[Sequence[Rational]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns nonzero rows and pivot columns."""
    A = [[_frac(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
    return A[:r], piv


def rank(rows: Iterable[Sequence[Rational]], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Rational]], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of ``{x : A x = 0}``."""
    R, piv = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, piv):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def _canonical_line_basis(lines: Sequence[Sequence[Rational]], k: int) -> list[tuple[int, ...]]:
    R, _ = rref(lines, k) if lines else ([], [])
    return [primitive(r) for r in R]


def _project_out(v: Sequence[int], lines: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Orthogonal projection of ``v`` onto the complement of span(lines)."""
    if not lines:
        return tuple(v)
    L = [[Fraction(x) for x in l] for l in lines]
    G = [[sum(a * b for a, b in zip(li, lj)) for lj in L] for li in L]
    rhs = [sum(a * b for a, b in zip(li, v)) for li in L]
    # solve G c = rhs
    m = len(L)
    aug = [G[i] + [rhs[i]] for i in range(m)]
    R, piv = rref(aug, m + 1)
    coef = [Fraction(0)] * m
    for row, p in zip(R, piv):
        coef[p] = row[m]
    w = [Fraction(x) - sum(c * l[j] for c, l in zip(coef, L)) for j, x in enumerate(v)]
    return primitive(w)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _reduce(v: Iterable[int]) -> tuple[int, ...]:
    v = tuple(v)
    g = math.gcd(*v) if v else 0
    return tuple(x // g for x in v) if g > 1 else v


def double_description(halfspaces: Sequence[Sequence[Rational]], k: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Extremal rays and lineality basis of ``{x in Q^k : a . x >= 0 for all a}``.

    Exact incremental double description.  Constraints are inserted in
    lexicographic order; two rays are combined only when they are adjacent
    (no third ray's zero set contains their common zero set).  Rays are
    returned projected orthogonally to the lineality space, primitive and
    sorted; the lineality basis is in reduced echelon form.
    """
    if k > DD_MAX_DIM:
        raise ResourceLimitError(f"ambient dimension {k} exceeds the enumeration bound {DD_MAX_DIM}")
    A = sorted({primitive(a) for a in halfspaces if any(_frac(x) for x in a)})
    if any(len(a) != k for a in A):
        raise DimensionMismatchError(f"halfspace normals need length {k}")
    lines: list[tuple[int, ...]] = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    rays: list[tuple[int, ...]] = []
    zeros: list[int] = []
    for idx, a in enumerate(A):
        bit = 1 << idx
        prev_bits = bit - 1
        hit = next((l for l in lines if _dot(a, l) != 0), None)
        if hit is not None:
            ah = _dot(a, hit)
            if ah < 0:
                hit, ah = tuple(-x for x in hit), -ah
            new_lines = []
            for l in lines:
                if l is hit or l == hit or l == tuple(-x for x in hit):
                    continue
                al = _dot(a, l)
                new_lines.append(_reduce(ah * x - al * y for x, y in zip(l, hit)) if al else l)
            lines = new_lines
            new_rays = []
            for r in rays:
                ar = _dot(a, r)
                new_rays.append(_reduce(ah * x - ar * y for x, y in zip(r, hit)) if ar else r)
            rays = new_rays
            zeros = [z | bit for z in zeros]
            rays.append(_reduce(hit))
            zeros.append(prev_bits)
            continue
        vals = [_dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        need = k - len(lines) - 2
        out_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        out_zeros = [zeros[i] for i in pos] + [zeros[i] | bit for i in zer]
        for i in pos:
            for j in neg:
                common = zeros[i] & zeros[j]
                if popcount(common) < need:
                    continue
                if any((zeros[t] & common) == common for t in range(len(rays)) if t != i and t != j):
                    continue
                vi, vj = vals[i], -vals[j]
                new = _reduce(vi * y + vj * x for x, y in zip(rays[i], rays[j]))
                out_rays.append(new)
                out_zeros.append(common | bit)
        rays, zeros = out_rays, out_zeros
    line_basis = _canonical_line_basis(lines, k)
    ext = sorted({_project_out(r, line_basis) for r in rays})
    return [r for r in ext if any(r)], line_basis


# --------------------------------------------------------------------------
# functionals


@dataclass(frozen=True)
class Functional:
    """Linear functional on entropy space; ``coeffs[mask]`` is the coefficient of ``S(mask)``."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(_frac(x) for x in self.coeffs)
        if len(c) != 1 << self.n:
            raise DimensionMismatchError(f"expected {1 << self.n} coefficients, got {len(c)}")
        if c[0] != 0:
            raise ValueError("coefficient of the empty set must be 0")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n: int) -> "Functional":
        return cls(n, (Fraction(0),) * (1 << n))

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "Functional":
        """Build from ``{subset: coefficient}``; terms on the empty set are dropped."""
        c = [Fraction(0)] * (1 << n)
        for s, v in terms.items():
            m = as_mask(s, n)
            if m:
                c[m] += _frac(v)
        return cls(n, tuple(c))

    @classmethod
    def from_reduced(cls, n: int, vec: Sequence[Rational]) -> "Functional":
        return cls(n, (Fraction(0),) + tuple(_frac(x) for x in vec))

    @classmethod
    def basis(cls, n: int, subset: SubsetLike) -> "Functional":
        """Dual basis element ``e*_I``."""
        return cls.from_terms(n, {as_mask(subset, n): 1})

    def reduced(self) -> tuple[Fraction, ...]:
        return self.coeffs[1:]

    def __getitem__(self, subset: SubsetLike) -> Fraction:
        return self.coeffs[as_mask(subset, self.n)]

    def _check(self, other: "Functional"):
        if other.n != self.n:
            raise DimensionMismatchError("functionals on different numbers of parties")

    def __add__(self, other: "Functional") -> "Functional":
        self._check(other)
        return Functional(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Functional") -> "Functional":
        self._check(other)
        return Functional(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Functional":
        return Functional(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, c) -> "Functional":
        c = _frac(c)
        return Functional(self.n, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, v):
        return evaluate(self, v)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def primitive(self) -> "Functional":
        return Functional.from_reduced(self.n, primitive(self.reduced()))

    def support(self) -> dict[int, Fraction]:
        return {m: c for m, c in enumerate(self.coeffs) if c}

    def to_json_obj(self) -> dict:
        return {"n": self.n, "coeffs": {subset_key(m): str(c) for m, c in self.support().items()}}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Functional":
        n = int(obj["n"])
        return cls.from_terms(n, {parse_subset_key(k): _frac(v) for k, v in obj["coeffs"].items()})

    def __str__(self):
        terms = []
        for m, c in sorted(self.support().items(), key=lambda t: (popcount(t[0]), t[0])):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            terms.append(f"{sign} {coef}S({''.join(map(str, parties_of(m)))})")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _vector_entries(v, n: int | None = None):
    """Split ``v`` into (n, entries list, exact flag)."""
    if isinstance(v, EntropyVector):
        return v.n, list(v.entries), False
    vals = list(v)
    size = len(vals)
    nn = size.bit_length() - 1
    if size != 1 << nn:
        raise DimensionMismatchError(f"vector length {size} is not a power of two")
    exact = all(isinstance(x, (Fraction, int, np.integer, str)) for x in vals)
    if exact:
        vals = [_frac(x) for x in vals]
    else:
        vals = [float(x) for x in vals]
    return nn, vals, exact


def _wrap(n: int, vals: list, exact: bool):
    if exact:
        return [Fraction(x) for x in vals]
    return EntropyVector(n, np.array(vals, dtype=float))


def evaluate(f: Functional, v) -> Fraction | float:
    """``sum_I f_I v_I``; exact when ``v`` is rational, float otherwise."""
    n, vals, exact = _vector_entries(v)
    if n != f.n:
        raise DimensionMismatchError(f"functional on {f.n} parties, vector on {n}")
    if exact:
        return sum((c * x for c, x in zip(f.coeffs, vals)), Fraction(0))
    return float(sum(float(c) * x for c, x in zip(f.coeffs, vals) if c))


# --------------------------------------------------------------------------
# entropy-space morphisms


def correlated_vector(subset: SubsetLike, n: int) -> list[int]:
    """``v^(I)_J = min(1, |I ∩ J|)``: entropy vector of parties ``I`` sharing one fair bit."""
    m = as_mask(subset, n)
    return [min(1, popcount(m & J)) for J in range(1 << n)]


def unit_vector(subset: SubsetLike, n: int) -> list[int]:
    m = as_mask(subset, n)
    return [1 if J == m else 0 for J in range(1 << n)]


def surject(v, n: int):
    """Keep the entries ``v_J`` with ``J ⊆ [n]``."""
    m, vals, exact = _vector_entries(v)
    if n > m:
        raise DimensionMismatchError(f"cannot surject {m} parties onto {n}")
    return _wrap(n, vals[: 1 << n], exact)


def inject(v, m: int):
    """Add trivial parties: ``w_J = v_{J ∩ [n]}``."""
    n, vals, exact = _vector_entries(v)
    if m < n:
        raise DimensionMismatchError(f"cannot inject {n} parties into {m}")
    low = full_mask(n)
    return _wrap(m, [vals[J & low] for J in range(1 << m)], exact)


def purify_map(v):
    """Add a purifying party: ``w_J = v_J`` if ``n+1 ∉ J`` else ``v_{[n+1] \\ J}``."""
    n, vals, exact = _vector_entries(v)
    full = full_mask(n + 1)
    top = 1 << n
    return _wrap(n + 1, [vals[J] if not J & top else vals[full ^ J] for J in range(1 << (n + 1))], exact)


def block(v, composition: Sequence[int]):
    """Merge consecutive parties into blocks of the given sizes."""
    m, vals, exact = _vector_entries(v)
    comp = [int(x) for x in composition]
    if any(x < 1 for x in comp) or sum(comp) != m:
        raise ValueError(f"{composition!r} is not a composition of {m}")
    masks, start = [], 0
    for size in comp:
        masks.append(((1 << size) - 1) << start)
        start += size
    n = len(comp)
    out = []
    for J in range(1 << n):
        K = 0
        for k in range(n):
            if J >> k & 1:
                K |= masks[k]
        out.append(vals[K])
    return _wrap(n, out, exact)


def _check_perm(perm: Sequence[int], size: int) -> tuple[int, ...]:
    p = tuple(int(x) for x in perm)
    if sorted(p) != list(range(1, size + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{size}")
    return p


def _perm_subset_map(perm: Sequence[int], n: int) -> list[int]:
    """``phi(I)``: image of ``I ⊆ [n]`` under ``perm``, complemented in ``[n+1]`` if it holds ``n+1``."""
    p = _check_perm(perm, n + 1)
    full = full_mask(n + 1)
    top = 1 << n
    out = []
    for I in range(1 << n):
        J = 0
        for i in parties_of(I):
            J |= 1 << (p[i - 1] - 1)
        out.append(full ^ J if J & top else J)
    return out


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, x in enumerate(perm):
        inv[x - 1] = i + 1
    return tuple(inv)


def compose_permutations(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``(p ∘ q)(x) = p(q(x))`` in one-line notation."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def transposition(i: int, j: int, size: int) -> tuple[int, ...]:
    p = list(range(1, size + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def symmetry_action(perm: Sequence[int], v):
    """Action of ``S_{n+1}`` on entropy vectors of ``n`` parties.

    ``perm`` is in one-line notation on ``1 .. n+1``.  The vector is purified,
    its parties relabelled by ``perm`` and party ``n+1`` discarded again, so
    ``(perm . v)_I = v_{phi(perm^{-1} I)}`` where ``phi`` complements sets
    containing ``n+1``.  This is a left action: ``(pq) . v = p . (q . v)``.
    """
    n, vals, exact = _vector_entries(v)
    phi = _perm_subset_map(invert_permutation(_check_perm(perm, n + 1)), n)
    return _wrap(n, [vals[phi[I]] for I in range(1 << n)], exact)


def adjoint_action(perm: Sequence[int], f: Functional) -> Functional:
    """``(perm . f)(v) = f(perm^{-1} . v)``."""
    phi = _perm_subset_map(perm, f.n)
    c = [Fraction(0)] * (1 << f.n)
    for I, coef in enumerate(f.coeffs):
        c[phi[I]] += coef
    return Functional(f.n, tuple(c))


def action_matrix(perm: Sequence[int], n: int) -> np.ndarray:
    """Permutation matrix of ``symmetry_action(perm, .)`` on the ``2**n`` coordinates."""
    phi = _perm_subset_map(invert_permutation(_check_perm(perm, n + 1)), n)
    M = np.zeros((1 << n, 1 << n), dtype=int)
    for I in range(1 << n):
        M[I, phi[I]] = 1
    return M


# --------------------------------------------------------------------------
# balancing


def residual_weights(f: Functional) -> list[Fraction]:
    """``r_i(f) = sum over I containing i of f_I``."""
    return [sum((c for m, c in enumerate(f.coeffs) if m >> i & 1), Fraction(0)) for i in range(f.n)]


def is_balanced(f: Functional) -> bool:
    return not any(residual_weights(f))


def monotonicity(i: int, n: int) -> Functional:
    """``m(i, i^c) = S([n]) - S([n] \\ {i})``, whose residual weights are ``e_i``."""
    full = full_mask(n)
    return Functional.from_terms(n, {full: 1, full ^ (1 << (i - 1)): -1})


def balance(f: Functional) -> Functional:
    """Project onto the balanced subspace along the span of the ``m(i, i^c)``."""
    out = f
    for i, r in enumerate(residual_weights(f), start=1):
        if r:
            out = out - r * monotonicity(i, f.n)
    return out


def balanced_subspace_basis(n: int) -> list[Functional]:
    """Basis of ``{f : r_i(f) = 0 for all i}`` in reduced coordinates."""
    k = (1 << n) - 1
    rows = [[1 if (m >> i) & 1 else 0 for m in range(1, 1 << n)] for i in range(n)]
    return [Functional.from_reduced(n, b) for b in nullspace(rows, k)]


# --------------------------------------------------------------------------
# cones


def _as_row(x, k: int | None) -> tuple[Fraction, ...]:
    if isinstance(x, Functional):
        x = x.reduced()
    row = tuple(_frac(c) for c in x)
    if k is not None and len(row) != k:
        raise DimensionMismatchError(f"expected vectors of length {k}, got {len(row)}")
    return row


@dataclass(frozen=True)
class PolyCone:
    """Polyhedral cone in ``Q^k`` given by generators, halfspaces or both.

    Generators are stored as primitive integer vectors (positive scaling),
    sorted and deduplicated.  Halfspace normals may be passed as
    :class:`Functional` objects, in which case their reduced coordinates are
    used.
    """

    n_ambient: int
    generators: tuple[tuple[int, ...], ...] | None = None
    halfspaces: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.generators is None and self.halfspaces is None:
            raise ValueError("a cone needs generators or halfspaces")
        k = self.n_ambient
        if self.generators is not None:
            gens = sorted({primitive(_as_row(g, k)) for g in self.generators} - {(0,) * k})
            object.__setattr__(self, "generators", tuple(gens))
        if self.halfspaces is not None:
            hs = sorted({primitive(_as_row(h, k)) for h in self.halfspaces} - {(0,) * k})
            object.__setattr__(self, "halfspaces", tuple(hs))

    @classmethod
    def from_functionals(cls, functionals: Iterable[Functional]) -> "PolyCone":
        fs = list(functionals)
        return cls((1 << fs[0].n) - 1, halfspaces=tuple(fs))

    def h_rep(self) -> tuple[tuple[int, ...], ...]:
        """Halfspaces, computing them from generators when absent (equalities as ± pairs)."""
        if self.halfspaces is not None:
            return self.halfspaces
        rays, lines = double_description(self.generators, self.n_ambient)
        out = list(rays) + list(lines) + [tuple(-x for x in l) for l in lines]
        return tuple(sorted(set(out)))

    def v_rep(self) -> tuple[tuple[int, ...], ...]:
        """Minimal generators (lines as ± pairs), computed from halfspaces."""
        rays, lines = double_description(self.h_rep(), self.n_ambient)
        out = list(rays) + list(lines) + [tuple(-x for x in l) for l in lines]
        return tuple(sorted(set(out)))

    def to_json_obj(self) -> dict:
        obj: dict = {"n_ambient": self.n_ambient}
        if self.generators is not None:
            obj["generators"] = [[str(x) for x in g] for g in self.generators]
        if self.halfspaces is not None:
            obj["halfspaces"] = [[str(x) for x in h] for h in self.halfspaces]
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PolyCone":
        gens = obj.get("generators")
        hs = obj.get("halfspaces")
        return cls(
            int(obj["n_ambient"]),
            None if gens is None else tuple(tuple(_frac(x) for x in g) for g in gens),
            None if hs is None else tuple(tuple(_frac(x) for x in h) for h in hs),
        )


def dual_cone(c: PolyCone) -> PolyCone:
    """``{y : y . x >= 0 for all x in c}`` with both representations filled in.

    The dual's halfspaces are the generators of ``c`` (or the minimal ones
    computed from its halfspaces), and its generators are the extremal rays
    of the cone spanned by ``c``'s halfspace normals.
    """
    k = c.n_ambient
    primal_v = c.generators if c.generators is not None else c.v_rep()
    dual_gens = PolyCone(k, halfspaces=primal_v).v_rep()
    return PolyCone(k, generators=dual_gens, halfspaces=primal_v)


def extremal_rays(c: PolyCone) -> list[tuple[int, ...]]:
    """Minimal generating set of ``c`` (lineality directions as ± pairs)."""
    return list(c.v_rep())


def membership(v: Sequence[Rational], c: PolyCone) -> bool:
    """Exact membership test via the halfspace representation."""
    row = _as_row(v, c.n_ambient)
    return all(sum(_frac(a) * x for a, x in zip(h, row)) >= 0 for h in c.h_rep())


def cone_contains(outer: PolyCone, inner: PolyCone) -> bool:
    gens = inner.generators if inner.generators is not None else inner.v_rep()
    return all(membership(g, outer) for g in gens)


def cones_equal(a: PolyCone, b: PolyCone) -> bool:
    return a.n_ambient == b.n_ambient and cone_contains(a, b) and cone_contains(b, a)


class FacetCheck(NamedTuple):
    is_facet: bool
    face_dim: int
    cone_dim: int


def is_facet(f: Functional, points: Sequence, cone_dim: int | None = None, tol: float = FLOAT_TOL) -> FacetCheck:
    """Decide whether the witnesses tight at ``f`` span a hyperplane of the cone.

    ``points`` are entropy vectors (float or exact) lying in the cone.  The
    face dimension is the rank of the points with ``f(point) = 0``;
    ``cone_dim`` defaults to the full dimension ``2**n - 1``.  A point with
    ``f(point) < 0`` raises :class:`RefutationError`.
    """
    if cone_dim is None:
        cone_dim = (1 << f.n) - 1
    tight = []
    exact_all = True
    for p in points:
        val = evaluate(f, p)
        _, vals, exact = _vector_entries(p)
        exact_all &= exact
        if (val < 0) if exact else (val < -tol):
            raise RefutationError(f"point violates the functional (value {val})", point=p)
        if (val == 0) if exact else (abs(val) <= tol):
            tight.append(vals[1:])
    if not tight:
        face = 0
    elif exact_all:
        face = rank(tight)
    else:
        face = int(np.linalg.matrix_rank(np.array(tight, dtype=float), tol=1e-9))
    return FacetCheck(face == cone_dim - 1, face, cone_dim)


def _span_rank(fs: Sequence[Functional]) -> int:
    return rank([f.reduced() for f in fs]) if fs else 0


def direct_sum_obstruction(ext: Sequence[Functional], subspace: Sequence[Functional]) -> bool:
    """True when the rays of ``ext`` outside ``span(subspace)`` span something meeting it.

    Such rays forbid splitting the dual cone as ``(K* ∩ B) ⊕ C``: every
    extremal ray of a direct sum lies in one of the summands.
    """
    B = list(subspace)
    rb = _span_rank(B)
    outside = [f for f in ext if _span_rank(B + [f]) > rb]
    if not outside:
        return False
    return _span_rank(outside) + rb - _span_rank(outside + B) > 0


def matus_transform(v) -> list:
    """``w_I = sum_{K ⊆ I} (-1)^{|I \\ K|} (v_[n] - v_{[n] \\ K})``; sends ``v^(I)`` to ``e^(I)``."""
    n, vals, exact = _vector_entries(v)
    full = full_mask(n)
    out = []
    for I in range(1 << n):
        acc = Fraction(0) if exact else 0.0
        for K in submasks(I):
            term = vals[full] - vals[full ^ K]
            acc += term if popcount(I ^ K) % 2 == 0 else -term
        out.append(acc)
    return out
