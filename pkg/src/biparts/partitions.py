"""Exact counting and enumeration of partitions and bipartitions.

Counting goes through an append-only memo table (:class:`CountCache`) filled
by the kernels in :mod:`biparts.kernels`; enumeration is kept independent so
the two can be played against each other as oracles.
"""

from __future__ import annotations

import threading
from typing import Iterator

from biparts import kernels

#: Default refusal threshold for the enumeration helpers.  Enumerating is
#: meant for oracle-scale inputs; predicted outputs larger than this raise
#: :class:`EnumerationCapError` instead of exhausting memory.
ENUMERATION_CAP = 10_000_000


class EnumerationCapError(ValueError):
    """Raised when an enumeration would produce more items than the cap."""


def _parse_row(text: str) -> tuple[int, ...]:
    if text == "-":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed integer list: {text!r}") from None


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(parts)
        previous = None
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive: {parts}")
            if previous is not None and previous < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
            previous = p
        self.parts = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of str(); the empty partition is written ``-``."""
        return cls(_parse_row(text))


class Bipartition:
    """An ordered pair of partitions."""

    __slots__ = ("top", "bottom")

    def __init__(self, top: Partition, bottom: Partition):
        self.top = top
        self.bottom = bottom

    @property
    def weight(self) -> int:
        return self.top.weight + self.bottom.weight

    def transpose(self) -> "Bipartition":
        return Bipartition(self.bottom, self.top)

    @property
    def is_degenerate(self) -> bool:
        return self.top == self.bottom

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Bipartition)
            and self.top == other.top
            and self.bottom == other.bottom
        )

    def __hash__(self) -> int:
        return hash((self.top.parts, self.bottom.parts))

    def __repr__(self) -> str:
        return f"Bipartition({self.top!r}, {self.bottom!r})"

    def __str__(self) -> str:
        return f"{self.top}|{self.bottom}"

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        """Inverse of str(); rows are separated by ``|``, empty row is ``-``."""
        head, sep, tail = text.partition("|")
        if not sep:
            raise ValueError(f"malformed bipartition (missing '|'): {text!r}")
        return cls(Partition.parse(head), Partition.parse(tail))


class CountCache:
    """Append-only memo tables for the three counting routes.

    Entries are write-once: the tables only ever grow, and every fill is
    deterministic, so concurrent readers are safe and concurrent fillers
    agree.  Growth is serialized by a lock.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._p = [1]
        self._p2 = [1]
        self._p2conv = [1]

    def _ensure_p(self, n: int) -> None:
        if n >= len(self._p):
            with self._lock:
                kernels.extend_partition_table(self._p, n)

    def _ensure_p2(self, n: int) -> None:
        if n >= len(self._p2):
            with self._lock:
                self._ensure_p(n // 2)
                kernels.extend_bipartition_table(self._p2, self._p, n)

    def _ensure_p2conv(self, n: int) -> None:
        if n >= len(self._p2conv):
            with self._lock:
                self._ensure_p(n)
                kernels.extend_self_convolution(self._p2conv, self._p, n)

    def partition_count(self, n: int) -> int:
        self._ensure_p(n)
        return self._p[n]

    def bipartition_count(self, n: int) -> int:
        self._ensure_p2(n)
        return self._p2[n]

    def bipartition_count_convolution(self, n: int) -> int:
        self._ensure_p2conv(n)
        return self._p2conv[n]

    def partition_prefix(self, upto: int) -> list:
        """Copy of the p table for indices 0..upto."""
        self._ensure_p(upto)
        return self._p[: upto + 1]

    def bipartition_prefix(self, upto: int) -> list:
        """Copy of the p2 table for indices 0..upto."""
        self._ensure_p2(upto)
        return self._p2[: upto + 1]


_CACHE = CountCache()


def partition_count(n: int) -> int:
    """p(n), by the pentagonal-number recurrence; 0 for negative n."""
    if n < 0:
        return 0
    return _CACHE.partition_count(n)


def bipartition_count(n: int) -> int:
    """p2(n), by the square recurrence p2(n) = p(n/2) + sum (-1)^(k-1) 2 p2(n-k^2)."""
    if n < 0:
        return 0
    return _CACHE.bipartition_count(n)


def bipartition_count_convolution(n: int) -> int:
    """p2(n), by convolving the partition-count table with itself.

    Independent of :func:`bipartition_count`; the two routes are compared by
    the verification harness.
    """
    if n < 0:
        return 0
    return _CACHE.bipartition_count_convolution(n)


def degenerate_count(n: int) -> int:
    """Number of degenerate bipartitions of n, i.e. p(n/2); 0 for odd or negative n."""
    if n < 0 or n & 1:
        return 0
    return _CACHE.partition_count(n // 2)


def partition_counts_upto(n: int) -> list:
    """The list [p(0), ..., p(n)]."""
    return _CACHE.partition_prefix(n)


def bipartition_counts_upto(n: int) -> list:
    """The list [p2(0), ..., p2(n)]."""
    return _CACHE.bipartition_prefix(n)


def _partitions_below(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_below(n - first, first):
            yield (first,) + rest


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of n in lexicographically decreasing order."""
    if n < 0:
        return
    for parts in _partitions_below(n, n):
        yield Partition(parts)


def enumerate_partitions(n: int, cap: int | None = None) -> list[Partition]:
    """All partitions of n, lexicographically decreasing.

    Empty for negative n; the single empty partition for n = 0.  Refuses
    with :class:`EnumerationCapError` when p(n) exceeds ``cap``.
    """
    if n < 0:
        return []
    limit = ENUMERATION_CAP if cap is None else cap
    expected = partition_count(n)
    if expected > limit:
        raise EnumerationCapError(
            f"{expected} partitions of {n} exceed the enumeration cap {limit}"
        )
    return list(iter_partitions(n))


def iter_bipartitions(n: int) -> Iterator[Bipartition]:
    """Yield bipartitions of n: top weight descending, then row order."""
    if n < 0:
        return
    for a in range(n, -1, -1):
        for top in iter_partitions(a):
            for bottom in iter_partitions(n - a):
                yield Bipartition(top, bottom)


def enumerate_bipartitions(n: int, cap: int | None = None) -> list[Bipartition]:
    """All bipartitions of n, top weight descending then row order.

    Refuses with :class:`EnumerationCapError` when p2(n) exceeds ``cap``.
    """
    if n < 0:
        return []
    limit = ENUMERATION_CAP if cap is None else cap
    expected = bipartition_count(n)
    if expected > limit:
        raise EnumerationCapError(
            f"{expected} bipartitions of {n} exceed the enumeration cap {limit}"
        )
    return list(iter_bipartitions(n))


def count_distinct_parts(n: int) -> int:
    """Number of partitions of n into pairwise distinct parts; 0 for n < 0."""
    if n < 0:
        return 0
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1):
        for w in range(n, part - 1, -1):
            ways[w] += ways[w - part]
    return ways[n]


def count_odd_parts(n: int) -> int:
    """Number of partitions of n into odd parts; 0 for n < 0."""
    if n < 0:
        return 0
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1, 2):
        for w in range(part, n + 1):
            ways[w] += ways[w - part]
    return ways[n]
