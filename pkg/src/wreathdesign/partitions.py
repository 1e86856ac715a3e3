"""Integer partitions and the dominance order.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order; the empty tuple is the empty partition.  Every function
here treats indices past the end of a partition as zero parts.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from functools import lru_cache
from itertools import accumulate, zip_longest

Partition = tuple[int, ...]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Sort ``parts`` into a partition, dropping zeros.

    Raises ``ValueError`` on negative entries.
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"partition parts must be non-negative: {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(p: Iterable[int]) -> bool:
    p = tuple(p)
    return all(x > 0 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return tuple(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def dominated_by(p: Partition, q: Partition) -> bool:
    """True iff every prefix sum of ``p`` is at most the matching prefix sum of ``q``.

    Sizes may differ.  Beyond the longer partition the prefix sums are
    constant, so checking up to ``max(len(p), len(q))`` suffices.
    """
    sp = sq = 0
    for a, b in zip_longest(p, q, fillvalue=0):
        sp += a
        sq += b
        if sp > sq:
            return False
    return True


def union(p: Partition, q: Partition) -> Partition:
    return tuple(sorted(p + q, reverse=True))


def componentwise_sum(p: Partition, q: Partition) -> Partition:
    return tuple(a + b for a, b in zip_longest(p, q, fillvalue=0))


def add_at(p: Partition, row: int, k: int) -> Partition:
    """The partition ``p +_row k``: add ``k`` to the ``row``-th part (1-based) and re-sort."""
    if row < 1:
        raise ValueError("row index is 1-based")
    parts = list(p) + [0] * max(0, row - len(p))
    parts[row - 1] += k
    return make_partition(parts)


def part(p: Partition, i: int) -> int:
    """The ``i``-th part (1-based), zero past the end."""
    return p[i - 1] if i <= len(p) else 0


def multiplicities(p: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for x in p:
        m[x] = m.get(x, 0) + 1
    return m


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence (independent of the generator)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def prefix_sums(p: Partition) -> list[int]:
    return list(accumulate(p))


def format_partition(p: Partition) -> str:
    """Compact exponent notation, e.g. ``(3,1,1)`` -> ``"31^2"``; the empty partition is ``"0"``."""
    if not p:
        return "0"
    out = []
    for value, count in sorted(multiplicities(p).items(), reverse=True):
        out.append(f"{value}" if count == 1 else f"{value}^{count}")
    return ",".join(out)
