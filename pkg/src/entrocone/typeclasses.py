"""Type classes, Chan–Yeung vectors and partition combinatorics.

Partitions are tuples of positive integers in weakly decreasing order.
Contents (the second argument of a Kostka number) may be any sequence of
nonnegative integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .entropy import EntropyVector, JointDistribution
from .errors import InvalidDistributionError
from .subsets import SubsetLike, as_mask, parties_of

PartitionLike = Sequence[int]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in p):
            raise ValueError(f"partition parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", p)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma list such as ``"5,3,2,2,1,1,1"``."""
        text = text.strip()
        return cls(tuple(int(t) for t in text.split(",") if t.strip()) if text else ())

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def _parts(lam) -> tuple[int, ...]:
    if isinstance(lam, Partition):
        return lam.parts
    return Partition(tuple(int(x) for x in lam if int(x) != 0)).parts


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, None if max_parts is None else max_parts - 1, first):
            yield (first,) + rest


def dominates(lam: PartitionLike, mu: PartitionLike) -> bool:
    """``lam ⊵ mu``: every partial sum of ``lam`` is at least that of ``mu`` (equal sizes)."""
    a, b = _parts(lam), _parts(mu)
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


# --------------------------------------------------------------------------
# type classes


def type_class_size(counts: Iterable[int]) -> int:
    """Number of strings with letter counts ``counts``: ``n! / prod f_a!``."""
    c = [int(x) for x in np.asarray(counts, dtype=object).reshape(-1)]
    if any(x < 0 for x in c):
        raise ValueError("frequencies must be nonnegative")
    out = math.factorial(sum(c))
    for x in c:
        out //= math.factorial(x)
    return out


def marginal_frequency(counts, subset: SubsetLike) -> np.ndarray:
    """Frequency table of the coordinates in ``subset``.

    ``counts`` is an ``n``-dimensional array indexed by the product alphabet;
    the empty subset gives a one-entry table holding the string length.
    """
    arr = np.asarray(counts, dtype=object)
    n = arr.ndim
    keep = [i - 1 for i in parties_of(as_mask(subset, n))]
    drop = tuple(ax for ax in range(n) if ax not in keep)
    out = arr.sum(axis=drop) if drop else arr
    return np.asarray(out, dtype=object).reshape([arr.shape[i] for i in keep] or [1])


def common_denominator(p: JointDistribution) -> int:
    if not p.exact:
        raise InvalidDistributionError("the Chan–Yeung construction needs exact rational probabilities")
    return math.lcm(*(x.denominator for x in p.probs.reshape(-1)))


def chan_yeung_vector(p: JointDistribution, k: int) -> EntropyVector:
    """``h_I = log2 |T_{kq p_I}|`` with ``q`` the common denominator of ``p``.

    This is the entropy vector of a string drawn uniformly from the type
    class of ``kq p``, whose marginal on ``I`` is uniform on the type class of
    the marginal type.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    q = common_denominator(p)
    counts = np.array([int(x * q * k) for x in p.probs.reshape(-1)], dtype=object).reshape(p.dims)
    n = p.n
    entries = np.zeros(1 << n)
    for m in range(1, 1 << n):
        entries[m] = math.log2(type_class_size(marginal_frequency(counts, m)))
    return EntropyVector(n, entries)


def chan_yeung_log_arguments(p: JointDistribution, k: int) -> list[int]:
    """Exact ``|T_{kq p_I}|`` per subset mask (1 for the empty set)."""
    q = common_denominator(p)
    counts = np.array([int(x * q * k) for x in p.probs.reshape(-1)], dtype=object).reshape(p.dims)
    return [type_class_size(marginal_frequency(counts, m)) if m else 1 for m in range(1 << p.n)]


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def aep_mass(p: Sequence, n: int, eps, norm: str = "l1"):
    """Probability that the empirical type of ``n`` i.i.d. draws lies within ``eps`` of ``p``.

    Sums ``|T_f| prod p_a^{f_a}`` over frequency vectors ``f`` with
    ``||f/n - p|| <= eps``; ``norm`` is ``"l1"`` or ``"inf"``.  Exact
    (a Fraction) when ``p`` is rational, float otherwise.
    """
    if norm not in ("l1", "inf"):
        raise ValueError("norm must be 'l1' or 'inf'")
    vals = list(p)
    exact = all(isinstance(x, (Fraction, int)) for x in vals)
    if exact:
        vals = [Fraction(x) for x in vals]
        if sum(vals) != 1 or any(x < 0 for x in vals):
            raise InvalidDistributionError("not a probability vector")
        bound = Fraction(eps)
        total = Fraction(0)
    else:
        vals = [float(x) for x in vals]
        if abs(sum(vals) - 1) > 1e-12 or any(x < 0 for x in vals):
            raise InvalidDistributionError("not a probability vector")
        bound = float(eps)
        total = 0.0
    for f in weak_compositions(n, len(vals)):
        devs = [abs((Fraction(c, n) if exact else c / n) - x) for c, x in zip(f, vals)]
        dist = sum(devs) if norm == "l1" else max(devs)
        if dist > bound:
            continue
        prob = type_class_size(f) * math.prod(x**c for x, c in zip(vals, f))
        total += prob
    return total


# --------------------------------------------------------------------------
# Kostka numbers and friends


def _horizontal_strips(outer: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions ``inner`` with ``outer / inner`` a horizontal strip of ``size`` boxes."""
    L = len(outer)

    def rec(i, remaining, acc):
        if i == L:
            if remaining == 0:
                yield tuple(x for x in acc if x)
            return
        lo = outer[i + 1] if i + 1 < L else 0
        for take in range(min(remaining, outer[i] - lo) + 1):
            yield from rec(i + 1, remaining - take, acc + [outer[i] - take])

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    last, rest = content[-1], content[:-1]
    if sum(shape) != sum(content):
        return 0
    return sum(_kostka(inner, rest) for inner in _horizontal_strips(shape, last))


def kostka(shape: PartitionLike, content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Peels off the largest letter as a horizontal strip, recursively.
    """
    c = tuple(int(x) for x in content)
    if any(x < 0 for x in c):
        raise ValueError("content entries must be nonnegative")
    return _kostka(_parts(shape), c)


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple[int, ...], letters: int) -> int:
    if not shape:
        return 1
    if letters == 0 or len(shape) > letters:
        return 0
    total = 0
    for size in range(shape[0] + 1):
        for inner in _horizontal_strips(shape, size):
            total += _ssyt_count(inner, letters - 1)
    return total


def dim_weyl(mu: PartitionLike, d: int) -> int:
    """Number of semistandard tableaux of shape ``mu`` with entries at most ``d``."""
    return _ssyt_count(_parts(mu), int(d))


def dim_permutation_module(lam: PartitionLike) -> int:
    """``n! / prod lam_i!``."""
    return type_class_size(_parts(lam))


def dim_specht(lam: PartitionLike) -> int:
    """Hook-length formula."""
    p = _parts(lam)
    n = sum(p)
    conj = [sum(1 for x in p if x > j) for j in range(p[0])] if p else []
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def multiplicity_shape(lam: PartitionLike, d: int) -> tuple[int, ...]:
    """Sorted multiplicities of the part values of ``lam`` padded with zeros to length ``d``."""
    p = _parts(lam)
    if len(p) > d:
        raise ValueError(f"partition {p} has more than d={d} parts")
    padded = list(p) + [0] * (d - len(p))
    return tuple(sorted(Counter(padded).values(), reverse=True))


def restriction_multiplicities(mu: PartitionLike, d: int) -> dict[tuple[int, ...], int]:
    """Multiplicity of each ``S_d`` irrep ``nu`` in the ``U(d)`` irrep ``mu`` restricted to ``S_d``.

    ``eta_{nu mu} = sum over lam ⊢ |mu| with at most d parts of K_{mu lam} K_{nu lam+}``.
    """
    m = _parts(mu)
    if len(m) > d:
        raise ValueError(f"partition {m} has more than d={d} rows")
    out = {nu: 0 for nu in partitions(d)}
    for lam in partitions(sum(m), max_parts=d):
        k1 = kostka(m, lam)
        if not k1:
            continue
        plus = multiplicity_shape(lam, d)
        for nu in out:
            out[nu] += k1 * kostka(nu, plus)
    return out


def schur_weyl_dimension_check(d: int, n: int) -> bool:
    """``sum over lam ⊢ n with at most d parts of dim M^lam * dim M^{lam+} = d^n``."""
    total = sum(
        dim_permutation_module(lam) * dim_permutation_module(multiplicity_shape(lam, d))
        for lam in partitions(n, max_parts=d)
    )
    return total == d**n


# --------------------------------------------------------------------------
# contingency tables


def _tables(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...], stop_at: int | None) -> int:
    r, c = len(mu), len(nu)
    avail = Counter(lam)
    cols = list(nu)
    count = 0

    class _Done(Exception):
        pass

    def cell(i, j, row_left):
        nonlocal count
        if i == r:
            if not +avail and not any(cols):
                count += 1
                if stop_at is not None and count >= stop_at:
                    raise _Done
            return
        if j == c - 1:
            choices = [row_left]
        else:
            choices = [0] + sorted(v for v in avail if avail[v] > 0)
        for v in choices:
            if v > row_left or v > cols[j]:
                continue
            if v and avail[v] <= 0:
                continue
            if v:
                avail[v] -= 1
            cols[j] -= v
            if j == c - 1:
                cell(i + 1, 0, mu[i + 1] if i + 1 < r else 0)
            else:
                cell(i, j + 1, row_left - v)
            cols[j] += v
            if v:
                avail[v] += 1

    try:
        if r and c:
            cell(0, 0, mu[0])
        elif not lam and not mu and not nu:
            count = 1
    except _Done:
        pass
    return count


def classical_kronecker(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """Contingency tables with row sums ``mu``, column sums ``nu`` and nonzero entries ``lam``."""
    a, b, c = _parts(lam), _parts(mu), _parts(nu)
    if not (sum(a) == sum(b) == sum(c)):
        return 0
    return _tables(a, b, c, None)


def marginal_compatible(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> bool:
    """Whether a joint type with sorted counts ``lam`` has marginal types ``mu`` and ``nu``."""
    a, b, c = _parts(lam), _parts(mu), _parts(nu)
    if not (sum(a) == sum(b) == sum(c)):
        return False
    return _tables(a, b, c, 1) > 0
