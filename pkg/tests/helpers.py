"""Shared oracles for the test suite."""

import numpy as np


def random_pure(rng, dims):
    D = int(np.prod(dims))
    v = rng.normal(size=D) + 1j * rng.normal(size=D)
    return v / np.linalg.norm(v)


def random_density(rng, dims, rank=None):
    D = int(np.prod(dims))
    k = rank or D
    A = rng.normal(size=(D, k)) + 1j * rng.normal(size=(D, k))
    rho = A @ A.conj().T
    return rho / np.trace(rho).real


def entropy_bits(p):
    p = np.asarray(p, dtype=float).reshape(-1)
    p = p[p > 1e-15]
    return float(-(p * np.log2(p)).sum())


def weak_rows(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_rows(total - first, parts - 1):
            yield (first,) + rest


def brute_table_shapes(mu, nu):
    """Sorted nonzero entry multisets of all tables with row sums mu and column sums nu.

    Returns a Counter keyed by the entry partition.
    """
    from collections import Counter

    out = Counter()

    def rec(i, cols, acc):
        if i == len(mu):
            if not any(cols):
                out[tuple(sorted((x for x in acc if x), reverse=True))] += 1
            return
        for row in weak_rows(mu[i], len(nu)):
            if all(r <= c for r, c in zip(row, cols)):
                rec(i + 1, [c - r for c, r in zip(cols, row)], acc + list(row))

    rec(0, list(nu), [])
    return out
