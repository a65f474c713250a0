"""Howell normal form of integer matrices over Z_N.

The Howell form is the canonical generating matrix of a row span over Z_N:
two matrices generate the same submodule exactly when their Howell forms
coincide.  Unlike the Smith form it keeps the span itself (not just its
isomorphism type), and it answers membership and kernel queries directly.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

Row = list[int]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s*a + t*b``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def _unit_normalizer(a: int, N: int) -> int:
    """A unit ``u`` of Z_N with ``u * a = gcd(a, N) (mod N)``."""
    g = gcd(a, N)
    m = N // g
    if m == 1:
        return 1
    u = pow(a // g, -1, m)
    while gcd(u, N) != 1:
        u += m
    return u % N


def howell_form(rows: Iterable[Sequence[int]], N: int, ncols: int | None = None) -> list[Row]:
    """Howell normal form of the row span of ``rows`` over Z_N.

    Returns the nonzero rows in echelon order.  Each pivot divides ``N``,
    entries above a pivot are reduced into ``[0, pivot)``, and the span of the
    rows whose leading column is ``>= c`` is exactly the set of span elements
    vanishing before column ``c`` (the Howell property).
    """
    if N < 1:
        raise ValueError("modulus must be positive")
    A = [[int(x) % N for x in r] for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if any(len(r) != ncols for r in A):
        raise ValueError("rows have inconsistent lengths")
    if N == 1:
        return []
    r = 0
    for c in range(ncols):
        for i in range(r + 1, len(A)):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, s, t = _xgcd(a, b)
            u, v = -b // g, a // g
            R, I = A[r], A[i]
            A[r] = [(s * x + t * y) % N for x, y in zip(R, I)]
            A[i] = [(u * x + v * y) % N for x, y in zip(R, I)]
        if r >= len(A) or A[r][c] == 0:
            continue
        unit = _unit_normalizer(A[r][c], N)
        A[r] = [(unit * x) % N for x in A[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [(x - q * y) % N for x, y in zip(A[i], A[r])]
        extra = [((N // piv) * x) % N for x in A[r]]
        if any(extra):
            A.append(extra)
        r += 1
    return [row for row in A[:r] if any(row)]


def pivots(form: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """``(column, pivot value)`` of each row of a Howell form."""
    out = []
    for row in form:
        c = next(j for j, x in enumerate(row) if x)
        out.append((c, row[c]))
    return out


def span_size(form: Sequence[Sequence[int]], N: int) -> int:
    size = 1
    for _, p in pivots(form):
        size *= N // p
    return size


def reduce_vector(form: Sequence[Sequence[int]], v: Sequence[int], N: int) -> list[int] | None:
    """Remainder of ``v`` after reduction by ``form``; None if a pivot does not divide."""
    v = [int(x) % N for x in v]
    for row, (c, p) in zip(form, pivots(form)):
        if v[c] % p:
            return None
        q = v[c] // p
        if q:
            v = [(x - q * y) % N for x, y in zip(v, row)]
    return v


def in_span(form: Sequence[Sequence[int]], v: Sequence[int], N: int) -> bool:
    rem = reduce_vector(form, v, N)
    return rem is not None and not any(rem)


def left_kernel(cols: Sequence[Sequence[int]], N: int) -> list[Row]:
    """Howell form of ``{x : x @ C = 0 mod N}`` where ``cols`` is the matrix ``C``.

    ``C`` has one row per domain coordinate.  Uses the Howell form of ``[C | I]``.
    """
    k = len(cols)
    m = len(cols[0]) if k else 0
    aug = [list(cols[i]) + [1 if j == i else 0 for j in range(k)] for i in range(k)]
    form = howell_form(aug, N, m + k)
    kernel = [row[m:] for row in form if not any(row[:m])]
    return howell_form(kernel, N, k)


def intersect_with_zero_block(rows: Sequence[Sequence[int]], zero_cols: Sequence[int], N: int, ncols: int) -> list[Row]:
    """Howell form of the span elements that vanish on ``zero_cols``."""
    zero_cols = list(zero_cols)
    aug = [[r[j] for j in zero_cols] + list(r) for r in rows]
    form = howell_form(aug, N, len(zero_cols) + ncols)
    z = len(zero_cols)
    return howell_form([row[z:] for row in form if not any(row[:z])], N, ncols)


def elements(form: Sequence[Sequence[int]], N: int, ncols: int) -> Iterable[tuple[int, ...]]:
    """Every element of the span, each exactly once."""
    piv = pivots(form)

    def rec(i, acc):
        if i == len(form):
            yield tuple(acc)
            return
        row = form[i]
        for c in range(N // piv[i][1]):
            yield from rec(i + 1, [(a + c * x) % N for a, x in zip(acc, row)])

    yield from rec(0, [0] * ncols)
