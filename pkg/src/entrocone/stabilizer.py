"""Symplectic phase spaces ``Z_d^{2n}`` and stabilizer entropy vectors.

Vectors are ordered ``(p_1, ..., p_n, q_1, ..., q_n)``; party ``i`` owns the
coordinate pair ``(p_i, q_i)``.  Submodules are stored by their Howell form,
so equality of submodules is equality of generator tuples.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import howell
from .entropy import EntropyVector
from .errors import DimensionMismatchError, NotIsotropicError, UnsupportedDimensionError
from .subsets import SubsetLike, as_mask, complement, parties_of, popcount

EXHAUSTIVE_LIMIT = 4096


def prime_factors(d: int) -> list[int]:
    out, p = [], 2
    while p * p <= d:
        while d % p == 0:
            out.append(p)
            d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def is_square_free(d: int) -> bool:
    f = prime_factors(d)
    return len(f) == len(set(f))


@dataclass(frozen=True)
class PhaseSpace:
    """``Z_d^{2n}`` with the standard symplectic form.

    Only square-free ``d`` is accepted: prime powers such as 4 or 9 raise
    :class:`UnsupportedDimensionError`.
    """

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one party")
        if self.d < 2:
            raise ValueError("local dimension must be at least 2")
        if not is_square_free(self.d):
            raise UnsupportedDimensionError(
                f"d={self.d} is not square-free; only square-free dimensions are supported"
            )

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def size(self) -> int:
        return self.d ** (2 * self.n)

    def coords(self, subset: SubsetLike) -> list[int]:
        """Coordinate indices ``p_i`` then ``q_i`` of the parties in ``subset``."""
        ps = parties_of(as_mask(subset, self.n))
        return [i - 1 for i in ps] + [self.n + i - 1 for i in ps]


@dataclass(frozen=True)
class Submodule:
    """Submodule of a phase space, held as a Howell-form generator tuple.

    Build instances with :func:`canonicalize`; the constructor assumes the
    rows are already canonical.
    """

    space: PhaseSpace
    generators: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return self.space.d

    @property
    def n(self) -> int:
        return self.space.n

    def cardinality(self) -> int:
        return cardinality(self)

    def contains(self, v: Sequence[int]) -> bool:
        return howell.in_span(self.generators, v, self.d)

    def is_isotropic(self) -> bool:
        return is_isotropic(self)

    def elements(self) -> Iterable[tuple[int, ...]]:
        return howell.elements(self.generators, self.d, self.space.dim)

    def __le__(self, other: "Submodule") -> bool:
        return all(other.contains(g) for g in self.generators)


def symplectic_form(v: Sequence[int], w: Sequence[int], space: PhaseSpace) -> int:
    """``sum_i v_{p_i} w_{q_i} - v_{q_i} w_{p_i}`` reduced mod ``d``."""
    n = space.n
    if len(v) != 2 * n or len(w) != 2 * n:
        raise DimensionMismatchError(f"phase-space vectors need length {2 * n}")
    return sum(v[i] * w[n + i] - v[n + i] * w[i] for i in range(n)) % space.d


def canonicalize(generators: Iterable[Sequence[int]], space: PhaseSpace) -> Submodule:
    """Submodule spanned by ``generators`` (entries are reduced mod ``d``)."""
    rows = [list(g) for g in generators]
    if any(len(r) != space.dim for r in rows):
        raise DimensionMismatchError(f"generator rows need length {space.dim}")
    form = howell.howell_form(rows, space.d, space.dim)
    return Submodule(space, tuple(tuple(r) for r in form))


def zero_module(space: PhaseSpace) -> Submodule:
    return Submodule(space, ())


def full_module(space: PhaseSpace) -> Submodule:
    return canonicalize(np.eye(space.dim, dtype=int).tolist(), space)


def cardinality(M: Submodule) -> int:
    return howell.span_size(M.generators, M.d)


def isotropy_violation(M: Submodule) -> tuple[int, int] | None:
    """Indices of a generator pair with nonzero symplectic product, if any."""
    gens = M.generators
    for i, j in itertools.combinations(range(len(gens)), 2):
        if symplectic_form(gens[i], gens[j], M.space):
            return (i, j)
    return None


def is_isotropic(M: Submodule) -> bool:
    return isotropy_violation(M) is None


def _require_isotropic(M: Submodule) -> None:
    bad = isotropy_violation(M)
    if bad is not None:
        raise NotIsotropicError(
            f"generators {bad[0]} and {bad[1]} have nonzero symplectic product", pair=bad
        )


def symplectic_complement(M: Submodule) -> Submodule:
    """``{v : omega(g, v) = 0 for every g in M}``."""
    space = M.space
    if not M.generators:
        return full_module(space)
    # column j holds omega(g_j, e_x) for each coordinate x
    cols = []
    for x in range(space.dim):
        e = [0] * space.dim
        e[x] = 1
        cols.append([symplectic_form(g, e, space) for g in M.generators])
    ker = howell.left_kernel(cols, space.d)
    return Submodule(space, tuple(tuple(r) for r in ker))


def restrict(M: Submodule, subset: SubsetLike) -> Submodule:
    """``M ∩ V_I``: elements of ``M`` supported on the parties in ``subset``."""
    space = M.space
    mask = as_mask(subset, space.n)
    outside = space.coords(complement(mask, space.n))
    if not outside:
        return M
    form = howell.intersect_with_zero_block(M.generators, outside, space.d, space.dim)
    return Submodule(space, tuple(tuple(r) for r in form))


def stabilizer_entropy_arguments(M: Submodule) -> list[Fraction]:
    """Exact ``d^{|I|} / |M_I|`` per subset mask, so that ``S(I) = log2`` of it."""
    _require_isotropic(M)
    n, d = M.n, M.d
    return [Fraction(d ** popcount(m), cardinality(restrict(M, m))) for m in range(1 << n)]


def stabilizer_entropy_vector(M: Submodule) -> EntropyVector:
    """Entropy vector (bits) of the stabilizer state of an isotropic submodule.

    ``S(I) = |I| log2 d - log2 |M_I|``.
    """
    args = stabilizer_entropy_arguments(M)
    entries = [0.0] + [
        math.log2(a.numerator) - math.log2(a.denominator) + 0.0 for a in args[1:]
    ]
    return EntropyVector(M.n, np.array(entries))


def classical_model_arguments(M: Submodule) -> list[Fraction]:
    """Exact ``|M^omega| / |M^omega ∩ V_{I^c}|`` per subset mask."""
    _require_isotropic(M)
    comp = symplectic_complement(M)
    total = cardinality(comp)
    n = M.n
    return [Fraction(total, cardinality(restrict(comp, complement(m, n)))) for m in range(1 << n)]


def classical_model_vector(M: Submodule) -> EntropyVector:
    """Entropy vector of the uniform distribution on ``M^omega``.

    Party ``i`` observes its coordinate pair ``(p_i, q_i)``, so
    ``H(X_I) = log2 |M^omega| - log2 |M^omega ∩ V_{I^c}|``.
    """
    args = classical_model_arguments(M)
    entries = [0.0] + [math.log2(a.numerator) - math.log2(a.denominator) for a in args[1:]]
    return EntropyVector(M.n, np.array(entries))


def crt_decompose(M: Submodule) -> list[Submodule]:
    """Split a submodule over square-free ``Z_d`` into its prime components.

    Component ``i`` is ``M mod p_i`` over ``Z_{p_i}``.  The decomposition is
    checked by rebuilding ``M`` from the components with the idempotents
    ``a_i = (d/p_i) * ((d/p_i)^{-1} mod p_i)``.
    """
    d = M.d
    primes = prime_factors(d)
    if len(primes) != len(set(primes)):
        raise UnsupportedDimensionError(f"d={d} is not square-free")
    if len(primes) == 1:
        return [M]
    parts = [canonicalize(M.generators, PhaseSpace(M.n, p)) for p in primes]
    rebuilt = []
    for p, part in zip(primes, parts):
        a = (d // p) * pow(d // p, -1, p)
        rebuilt.extend([a * x for x in g] for g in part.generators)
    if canonicalize(rebuilt, M.space) != M:
        raise AssertionError("prime components do not rebuild the submodule")
    return parts


def crt_compose(parts: Sequence[Submodule]) -> Submodule:
    """Inverse of :func:`crt_decompose`."""
    n = parts[0].n
    primes = [p.d for p in parts]
    d = math.prod(primes)
    rows = []
    for p, part in zip(primes, parts):
        a = (d // p) * pow(d // p, -1, p)
        rows.extend([a * x for x in g] for g in part.generators)
    return canonicalize(rows, PhaseSpace(n, d))


class IsotropicEnumeration(NamedTuple):
    modules: list[Submodule]
    truncated: bool
    exhaustive: bool


def _extensions(M: Submodule) -> Iterable[Submodule]:
    comp = symplectic_complement(M)
    seen = set()
    for v in comp.elements():
        if M.contains(v):
            continue
        ext = canonicalize(list(M.generators) + [v], M.space)
        if ext.generators not in seen:
            seen.add(ext.generators)
            yield ext


def enumerate_isotropic(space: PhaseSpace, budget: int | None = None, seed: int = 0) -> IsotropicEnumeration:
    """Isotropic submodules of ``space`` in lexicographic order of their Howell forms.

    When ``d^{2n} <= 4096`` every isotropic submodule is found by closing
    ``{0}`` under one-vector extensions inside the symplectic complement.
    Larger spaces are sampled by random extension chains seeded by ``seed``.
    At most ``budget`` modules are returned; ``truncated`` reports whether
    any were left out.
    """
    if budget is not None and budget <= 0:
        return IsotropicEnumeration([], True, space.size <= EXHAUSTIVE_LIMIT)
    if space.size <= EXHAUSTIVE_LIMIT:
        found = {(): zero_module(space)}
        frontier = [zero_module(space)]
        while frontier:
            nxt = []
            for M in frontier:
                for ext in _extensions(M):
                    if ext.generators not in found:
                        found[ext.generators] = ext
                        nxt.append(ext)
            frontier = nxt
        ordered = [found[k] for k in sorted(found)]
        if budget is not None and len(ordered) > budget:
            return IsotropicEnumeration(ordered[:budget], True, True)
        return IsotropicEnumeration(ordered, False, True)

    limit = 256 if budget is None else budget
    rng = random.Random(seed)
    found = {(): zero_module(space)}
    attempts = 0
    while len(found) < limit and attempts < 50 * limit:
        attempts += 1
        M = zero_module(space)
        for _ in range(rng.randint(1, 2 * space.n)):
            comp = symplectic_complement(M)
            v = _random_element(comp, rng)
            M = canonicalize(list(M.generators) + [v], space)
            found.setdefault(M.generators, M)
    ordered = [found[k] for k in sorted(found)][:limit]
    return IsotropicEnumeration(ordered, True, False)


def _random_element(M: Submodule, rng: random.Random) -> list[int]:
    d = M.d
    v = [0] * M.space.dim
    for row, (_, p) in zip(M.generators, howell.pivots(M.generators)):
        c = rng.randrange(d // p)
        v = [(a + c * x) % d for a, x in zip(v, row)]
    return v


def random_isotropic(space: PhaseSpace, rng: random.Random, steps: int | None = None) -> Submodule:
    """A random isotropic submodule built from a chain of random extensions."""
    M = zero_module(space)
    for _ in range(rng.randint(1, 2 * space.n) if steps is None else steps):
        M = canonicalize(list(M.generators) + [_random_element(symplectic_complement(M), rng)], space)
    return M


# --------------------------------------------------------------------------
# file format: first line "d n", then one generator row of 2n integers per line


def format_submodule(M: Submodule) -> str:
    lines = [f"{M.d} {M.n}"] + [" ".join(str(x) for x in g) for g in M.generators]
    return "\n".join(lines) + "\n"


def parse_submodule(text: str) -> Submodule:
    lines = [(k, ln.split("#", 1)[0].strip()) for k, ln in enumerate(text.splitlines(), start=1)]
    lines = [(k, ln) for k, ln in lines if ln]
    if not lines:
        raise ValueError("empty submodule file")
    try:
        d, n = (int(x) for x in lines[0][1].split())
    except ValueError:
        raise ValueError(f"line {lines[0][0]}: expected 'd n'") from None
    space = PhaseSpace(n, d)
    rows = []
    for lineno, ln in lines[1:]:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer entry") from None
        if len(row) != 2 * n:
            raise ValueError(f"line {lineno}: expected {2 * n} entries, got {len(row)}")
        rows.append(row)
    return canonicalize(rows, space)
