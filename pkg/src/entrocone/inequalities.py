"""Named information inequalities as exact functionals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .cones import Functional
from .subsets import SubsetLike, as_mask, full_mask, parties_of

Family = Literal["shannon-elemental", "ssa", "weak-monotonicity", "non-shannon", "linear-rank"]


@dataclass(frozen=True)
class NamedInequality:
    """``functional >= 0`` with a display name and a family tag."""

    name: str
    functional: Functional
    family: Family

    def to_json_obj(self) -> dict:
        return {"name": self.name, "family": self.family, **self.functional.to_json_obj()}


def _terms(n: int, *pairs) -> Functional:
    out = Functional.zero(n)
    for subset, c in pairs:
        out = out + Functional.from_terms(n, {as_mask(subset, n): c})
    return out


def ssa(I: SubsetLike, J: SubsetLike, n: int) -> Functional:
    """``Δ[I,J] = S(I) + S(J) - S(I ∪ J) - S(I ∩ J)``."""
    a, b = as_mask(I, n), as_mask(J, n)
    return _terms(n, (a, 1), (b, 1), (a | b, -1), (a & b, -1))


def weak_monotonicity(I: SubsetLike, J: SubsetLike, n: int) -> Functional:
    """``E[I,J] = S(I) + S(J) - S(I \\ J) - S(J \\ I)``."""
    a, b = as_mask(I, n), as_mask(J, n)
    return _terms(n, (a, 1), (b, 1), (a & ~b, -1), (b & ~a, -1))


def conditional_mutual_information(A: SubsetLike, B: SubsetLike, C: SubsetLike, n: int) -> Functional:
    """``I(A:B|C) = S(AC) + S(BC) - S(ABC) - S(C)``."""
    a, b, c = as_mask(A, n), as_mask(B, n), as_mask(C, n)
    return _terms(n, (a | c, 1), (b | c, 1), (a | b | c, -1), (c, -1))


def mutual_information(A: SubsetLike, B: SubsetLike, n: int) -> Functional:
    return conditional_mutual_information(A, B, 0, n)


def _compact(mask: int) -> str:
    return "".join(str(i) for i in parties_of(mask)) or "∅"


def elemental_shannon(n: int) -> list[NamedInequality]:
    """``H(X_i | X_{i^c}) >= 0`` and ``I(X_i : X_j | X_K) >= 0``; ``n + C(n,2) 2^(n-2)`` of them."""
    full = full_mask(n)
    out = []
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        out.append(NamedInequality(
            f"H({i}|{_compact(full ^ bit)})",
            conditional_mutual_information(bit, bit, full ^ bit, n),
            "shannon-elemental",
        ))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        rest = full ^ (1 << (i - 1)) ^ (1 << (j - 1))
        for K in sorted(_submasks(rest)):
            out.append(NamedInequality(
                f"I({i}:{j}|{_compact(K)})",
                conditional_mutual_information(1 << (i - 1), 1 << (j - 1), K, n),
                "shannon-elemental",
            ))
    return out


def _submasks(mask: int):
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def pippenger_sets(n: int) -> tuple[list[NamedInequality], list[NamedInequality]]:
    """Essential strong subadditivity and weak monotonicity instances.

    ``E_Δ``: ``Δ[I,J]`` with ``I \\ J = {i}``, ``J \\ I = {j}``, ``i < j``.
    ``E_E``: ``E[I,J]`` with ``I ∩ J = {k}``, ``I ∪ J = [n]`` and the cyclic
    successor of ``k`` in ``I``.
    """
    full = full_mask(n)
    e_delta = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        rest = full ^ (1 << (i - 1)) ^ (1 << (j - 1))
        for K in sorted(_submasks(rest)):
            I, J = K | 1 << (i - 1), K | 1 << (j - 1)
            e_delta.append(NamedInequality(f"Δ[{_compact(I)},{_compact(J)}]", ssa(I, J, n), "ssa"))
    e_e = []
    for k in range(1, n + 1):
        nxt = k % n + 1
        kbit, nbit = 1 << (k - 1), 1 << (nxt - 1)
        if nxt == k:
            continue
        rest = full ^ kbit ^ nbit
        for extra in sorted(_submasks(rest)):
            I = kbit | nbit | extra
            J = (full ^ I) | kbit
            e_e.append(NamedInequality(
                f"E[{_compact(I)},{_compact(J)}]", weak_monotonicity(I, J, n), "weak-monotonicity"
            ))
    return e_delta, e_e


def zhang_yeung() -> NamedInequality:
    """Zhang–Yeung inequality on four parties, from its compact form

    ``I(1:2) + I(1:34) + 3 I(3:4|1) + I(3:4|2) - 2 I(3:4) >= 0``.
    """
    n = 4
    f = (
        mutual_information({1}, {2}, n)
        + mutual_information({1}, {3, 4}, n)
        + 3 * conditional_mutual_information({3}, {4}, {1}, n)
        + conditional_mutual_information({3}, {4}, {2}, n)
        - 2 * mutual_information({3}, {4}, n)
    )
    return NamedInequality("Zhang-Yeung", f, "non-shannon")


def ingleton() -> NamedInequality:
    """``I(1:2|3) + I(1:2|4) + I(3:4) - I(1:2) >= 0``, valid for ranks of subspaces."""
    n = 4
    f = (
        conditional_mutual_information({1}, {2}, {3}, n)
        + conditional_mutual_information({1}, {2}, {4}, n)
        + mutual_information({3}, {4}, n)
        - mutual_information({1}, {2}, n)
    )
    return NamedInequality("Ingleton", f, "linear-rank")


def von_neumann_cone(n: int) -> list[NamedInequality]:
    """Every nonzero ``Δ[I,J]`` and ``E[I,J]`` on ``n`` parties, deduplicated.

    These cut out the outer bound on the quantum entropy cone generated by
    strong subadditivity and weak monotonicity.
    """
    seen = set()
    out = []
    for I, J in itertools.combinations_with_replacement(range(1 << n), 2):
        for name, f, fam in (
            (f"Δ[{_compact(I)},{_compact(J)}]", ssa(I, J, n), "ssa"),
            (f"E[{_compact(I)},{_compact(J)}]", weak_monotonicity(I, J, n), "weak-monotonicity"),
        ):
            if f.is_zero():
                continue
            key = f.primitive().coeffs
            if key in seen:
                continue
            seen.add(key)
            out.append(NamedInequality(name, f, fam))
    return out


def catalog(n: int) -> list[NamedInequality]:
    """All named inequalities available on ``n`` parties."""
    out = list(elemental_shannon(n))
    e_delta, e_e = pippenger_sets(n)
    out += e_delta + e_e
    if n == 4:
        out += [zhang_yeung(), ingleton()]
    return out
