"""Partitions, conjugates, tableau corners and exact binomials.

All indices exposed here are 1-based, so ``p.part(1)`` is the longest row.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence


class PartitionError(ValueError):
    """Raised for malformed partitions; ``position`` is 1-based (0 for empty)."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return self.parts[0]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        """Number of rows of length at least two."""
        return sum(1 for v in self.parts if v >= 2)

    def part(self, i: int) -> int:
        """lambda_i, with lambda_i = 0 past the last row."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= self.n else 0

    def is_staircase(self) -> bool:
        return self.parts == tuple(range(self.n, 0, -1))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.n

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class CornerData:
    outer: tuple[tuple[int, int], ...]
    inner: tuple[tuple[int, int], ...]
    indices: tuple[int, ...] = field(repr=False)  # j_0 = 0 < j_1 < ... < j_t = n

    @property
    def t(self) -> int:
        return len(self.outer)


def validate_partition(raw: Sequence[int]) -> Partition:
    raw = list(raw)
    if not raw:
        raise PartitionError("partition is empty", 0)
    for pos, v in enumerate(raw, start=1):
        if isinstance(v, bool) or int(v) != v:
            raise PartitionError(f"entry {pos} is not an integer: {v!r}", pos)
        if v < 1:
            raise PartitionError(f"entry {pos} is not positive: {v}", pos)
        if pos > 1 and v > raw[pos - 2]:
            raise PartitionError(
                f"entry {pos} ({v}) exceeds entry {pos - 1} ({raw[pos - 2]})", pos)
    return Partition(tuple(int(v) for v in raw))


def parse_partition(text: str) -> Partition:
    """Parse ``"6,4,4,2,1"`` (whitespace tolerated)."""
    items = [tok.strip() for tok in text.split(",")]
    if items == [""]:
        raise PartitionError("partition is empty", 0)
    values = []
    for pos, tok in enumerate(items, start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise PartitionError(f"entry {pos} is not an integer: {tok!r}", pos) from None
    return validate_partition(values)


def dual(p: Partition) -> Partition:
    return Partition(tuple(sum(1 for v in p.parts if v >= j) for j in range(1, p.m + 1)))


def corners(p: Partition) -> CornerData:
    """Outer and inner corners of the tableau.

    The indices follow the recursion j_0 = 0, j_{i+1} = max{k : lambda_k = lambda_{j_i + 1}};
    the outer corners are (j_i, lambda_{j_i}) and the inner ones (j_{i-1}, lambda_{j_i}) for i >= 2.
    """
    js = [0]
    while js[-1] < p.n:
        target = p.part(js[-1] + 1)
        js.append(max(k for k in range(1, p.n + 1) if p.part(k) == target))
    outer = tuple((j, p.part(j)) for j in js[1:])
    inner = tuple((js[i - 1], p.part(js[i])) for i in range(2, len(js)))
    return CornerData(outer, inner, tuple(js))


def binomial(a: int, k: int) -> int:
    """C(a, k), zero outside 0 <= k <= a."""
    if k < 0 or a < 0 or k > a:
        return 0
    return math.comb(a, k)


def partitions_of(weight: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``weight`` in reverse lexicographic order."""
    if max_part is None:
        max_part = weight

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    if weight < 1:
        return
    for parts in rec(weight, max_part):
        yield Partition(parts)


def partitions_up_to(max_weight: int) -> Iterator[Partition]:
    for w in range(1, max_weight + 1):
        yield from partitions_of(w)


def staircase(n: int) -> Partition:
    return Partition(tuple(range(n, 0, -1)))


def rectangle(n: int, m: int) -> Partition:
    return Partition((m,) * n)
