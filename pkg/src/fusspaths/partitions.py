"""Integer-partition helpers shared by all counting formulas.

Partitions are tuples of positive integers in weakly decreasing order; the
empty tuple is the empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class PartitionFormatError(ValueError):
    """Raised for text or tuples that do not denote a partition."""


def check_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Validate that parts is weakly decreasing and strictly positive."""
    if any(p < 1 for p in parts):
        raise PartitionFormatError("partition parts must be positive: %r" % (parts,))
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise PartitionFormatError("parts must be weakly decreasing: %r" % (parts,))
    return tuple(parts)


def normalize_partition(parts) -> tuple[int, ...]:
    """Sort arbitrary positive parts into the canonical weakly decreasing form."""
    out = tuple(sorted(parts, reverse=True))
    if any(p < 1 for p in out):
        raise PartitionFormatError("partition parts must be positive: %r" % (parts,))
    return out


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse comma-separated parts; the empty string denotes the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise PartitionFormatError("bad partition text %r" % text) from exc
    return check_partition(parts)


def render_partition(parts: tuple[int, ...]) -> str:
    return ",".join(str(p) for p in parts)


@dataclass(frozen=True)
class PartitionStats:
    size: int
    length: int
    multiplicity_factor: int


def multiplicity_factor(parts: tuple[int, ...]) -> int:
    """Product of factorials of the part multiplicities; 1 for the empty partition."""
    result = 1
    run = 1
    for a, b in zip(parts, parts[1:]):
        if a == b:
            run += 1
            result *= run
        else:
            run = 1
    return result


def partition_stats(parts: tuple[int, ...]) -> PartitionStats:
    parts = check_partition(tuple(parts))
    return PartitionStats(
        size=sum(parts),
        length=len(parts),
        multiplicity_factor=multiplicity_factor(parts),
    )


def _partitions_of(size: int, max_part: int, max_length: int) -> Iterator[tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_of(size - first, first, max_length - 1):
            yield (first,) + rest


def partitions_with_bounds(max_size: int, max_length: int) -> Iterator[tuple[int, ...]]:
    """All partitions with size <= max_size and length <= max_length.

    Deterministic order: increasing size, then decreasing lexicographic
    within each size, e.g. (), (1), (2), (1, 1), (3), (2, 1), ...
    """
    if max_size < 0 or max_length < 0:
        raise PartitionFormatError("bounds must be nonnegative")
    for size in range(max_size + 1):
        yield from _partitions_of(size, size, max_length)


def partition_sort_key(parts: tuple[int, ...]):
    """Order matching partitions_with_bounds: by size, then reverse-lex."""
    return (sum(parts), tuple(-p for p in parts))


def naive_partition_count(size: int, max_length: int) -> int:
    """Independent recursive counter of partitions of exactly `size` with
    at most max_length parts; used to cross-check the generator."""

    def count(remaining: int, max_part: int, slots: int) -> int:
        if remaining == 0:
            return 1
        if slots == 0 or max_part == 0:
            return 0
        total = 0
        for first in range(1, min(remaining, max_part) + 1):
            total += count(remaining - first, first, slots - 1)
        return total

    return count(size, size, max_length)
