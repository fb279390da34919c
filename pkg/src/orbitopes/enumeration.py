"""Enumeration helpers shared across the geometry and invariant layers."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


def distinct_permutations(values: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """Yield each rearrangement of a multiset exactly once.

    Recursive placement by first element; n!/prod(mult_i!) outputs, no
    post-hoc deduplication.
    """
    values = sorted(values, reverse=True)
    n = len(values)
    if n == 0:
        yield ()
        return

    def rec(remaining: list[T]) -> Iterator[tuple[T, ...]]:
        if not remaining:
            yield ()
            return
        seen = set()
        for idx, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            rest = remaining[:idx] + remaining[idx + 1:]
            for tail in rec(rest):
                yield (v,) + tail

    yield from rec(values)


def subsets(items: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """All subsets of ``items``, as tuples, by increasing size."""
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def set_partitions(items: Sequence[T]) -> Iterator[list[list[T]]]:
    """Unordered partitions of ``items`` into nonempty blocks.

    The empty sequence has one partition: the empty list of blocks.
    """
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def ordered_set_partitions(items: Sequence[T]) -> Iterator[tuple[tuple[T, ...], ...]]:
    """Ordered partitions of ``items`` into nonempty blocks (Fubini many)."""
    items = list(items)
    if not items:
        yield ()
        return
    n = len(items)
    for k in range(1, n + 1):
        for block_idx in combinations(range(n), k):
            chosen = set(block_idx)
            block = tuple(items[i] for i in block_idx)
            rest = [items[i] for i in range(n) if i not in chosen]
            for tail in ordered_set_partitions(rest):
                yield (block,) + tail
