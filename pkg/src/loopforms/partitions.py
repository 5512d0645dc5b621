"""Integer partitions encoded as exponent maps.

A partition is stored as a tuple of (part, multiplicity) pairs, sorted by
part, with every part and multiplicity >= 1.  The empty tuple is the empty
partition (degree 0).  This canonical encoding is hashable, so partitions can
key sparse polynomial dictionaries directly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Tuple

Partition = Tuple[Tuple[int, int], ...]

EMPTY: Partition = ()


def make_partition(parts) -> Partition:
    """Canonicalize an iterable of positive parts (with repetition)."""
    counts: dict[int, int] = {}
    for p in parts:
        if p < 1:
            raise ValueError("partition parts must be >= 1")
        counts[p] = counts.get(p, 0) + 1
    return tuple(sorted(counts.items()))


def degree(lam: Partition) -> int:
    return sum(p * m for p, m in lam)


def merge(lam: Partition, mu: Partition) -> Partition:
    """Multiset union, i.e. the monomial product h^lam * h^mu."""
    counts = dict(lam)
    for p, m in mu:
        counts[p] = counts.get(p, 0) + m
    return tuple(sorted(counts.items()))


def scale_parts(lam: Partition, m: int) -> Partition:
    """Multiply every part by m (the index substitution h_r -> h_{m r})."""
    if m < 1:
        raise ValueError("scale factor must be >= 1")
    return tuple((p * m, k) for p, k in lam)


def parts_list(lam: Partition) -> list[int]:
    out = []
    for p, m in lam:
        out.extend([p] * m)
    return out


def partitions_of(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of d, largest part first, in a deterministic order."""
    if d < 0:
        return
    if max_part is None:
        max_part = d

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield []
            return
        for p in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - p, p):
                yield [p] + rest

    for parts in gen(d, max_part):
        yield make_partition(parts)


@lru_cache(maxsize=None)
def partition_count(d: int) -> int:
    """p(d) by direct enumeration; independent oracle for basis cardinalities."""
    if d < 0:
        return 0
    return sum(1 for _ in partitions_of(d))


@lru_cache(maxsize=None)
def partition_count_recurrence(d: int) -> int:
    """p(d) by the pentagonal-number recurrence, as a cross-check."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > d and g2 > d:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= d:
            total += sign * partition_count_recurrence(d - g1)
        if g2 <= d:
            total += sign * partition_count_recurrence(d - g2)
        k += 1
    return total


def partitions_distinct(d: int) -> Iterator[Partition]:
    """Partitions of d into pairwise distinct parts."""
    for lam in partitions_of(d):
        if all(m == 1 for _, m in lam):
            yield lam


def partitions_odd(d: int) -> Iterator[Partition]:
    """Partitions of d into odd parts."""
    for lam in partitions_of(d):
        if all(p % 2 == 1 for p, _ in lam):
            yield lam


def partitions_even(d: int) -> Iterator[Partition]:
    """Partitions of d into even parts (empty unless d is even)."""
    for lam in partitions_of(d):
        if all(p % 2 == 0 for p, _ in lam):
            yield lam


def euler_count(d: int) -> tuple[int, int]:
    """(number of distinct-part partitions, number of odd-part partitions)."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return (sum(1 for _ in partitions_distinct(d)),
            sum(1 for _ in partitions_odd(d)))
