"""Bitmask conventions for subsets of parties.

Party ``i`` (1-based) corresponds to bit ``i - 1``; the empty set is mask 0.
Every module, file format and API in the package shares this convention.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

SubsetLike = Union[int, Iterable[int]]


def mask_of(parties: Iterable[int]) -> int:
    """Bitmask of an iterable of 1-based party labels."""
    m = 0
    for i in parties:
        if i < 1:
            raise ValueError(f"party labels are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def as_mask(subset: SubsetLike, n: int) -> int:
    """Accept either a bitmask or an iterable of parties; validate against ``n``."""
    m = subset if isinstance(subset, int) else mask_of(subset)
    if m < 0 or m >> n:
        raise ValueError(f"subset {subset!r} is not contained in [{n}]")
    return m


def parties_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) ^ mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask`` itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def subset_key(mask: int) -> str:
    """Serialization key: comma-joined sorted parties, ``""`` for the empty set."""
    return ",".join(str(i) for i in parties_of(mask))


def parse_subset_key(key: str) -> int:
    key = key.strip()
    if not key:
        return 0
    return mask_of(int(tok) for tok in key.split(","))


def subset_label(mask: int) -> str:
    """Compact human label, e.g. ``{1,2}``."""
    return "{" + ",".join(str(i) for i in parties_of(mask)) + "}"
