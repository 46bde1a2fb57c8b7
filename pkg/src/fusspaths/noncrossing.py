"""Noncrossing set partitions and the tracing map from (k, k)-Fuss-Schroder
paths to sparse noncrossing partitions.

A partition of [m] is noncrossing when no two blocks interleave in the order
a x b y; it is sparse when no block contains two consecutive integers.
Blocks are ordered by their smallest elements.  The tracing map represents a
path by the multiset of labels of its E and D steps and rewrites a number
sequence step by step; the final sequence of length 2(k+1)n + 2 names, at
each position, the block that position belongs to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .paths import DIAG, EAST, NORTH, LatticePath, PathError, family_spec, is_member


@dataclass(frozen=True)
class NCPartition:
    """A set partition of [m]; blocks sorted internally and by smallest element."""

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for block in self.blocks:
            if not block or list(block) != sorted(block):
                raise PathError("blocks must be nonempty and sorted")
        elements = [x for block in self.blocks for x in block]
        if len(elements) != len(set(elements)):
            raise PathError("blocks must be disjoint")
        if set(elements) != set(range(1, self.m + 1)):
            raise PathError("blocks must partition 1..%d" % self.m)
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise PathError("blocks must be ordered by smallest element")

    @classmethod
    def of(cls, m: int, blocks) -> "NCPartition":
        normalized = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return cls(m=m, blocks=normalized)

    def block_of(self, x: int) -> tuple[int, ...]:
        for block in self.blocks:
            if x in block:
                return block
        raise PathError("%d is not in 1..%d" % (x, self.m))

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "blocks": [list(b) for b in self.blocks]})

    def __str__(self) -> str:
        return "(" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def is_noncrossing(p: NCPartition) -> bool:
    """No elements arranged a x b y with a, b in one block, x, y in another."""
    for bi, block in enumerate(p.blocks):
        for other in p.blocks[bi + 1 :]:
            for a, b in zip(block, block[1:]):
                inside = sum(1 for x in other if a < x < b)
                if 0 < inside < len(other):
                    return False
    return True


def is_sparse(p: NCPartition) -> bool:
    """No two consecutive integers share a block."""
    return all(b - a > 1 for block in p.blocks for a, b in zip(block, block[1:]))


def connected_components(p: NCPartition) -> tuple[tuple[int, ...], ...]:
    """The maximal intervals {1..i1}, {i1+1..i2}, ... closed under blocks."""
    components = []
    start = 1
    while start <= p.m:
        end = max(p.block_of(start))
        probe = start
        while probe <= end:
            end = max(end, max(p.block_of(probe)))
            probe += 1
        components.append(tuple(range(start, end + 1)))
        start = end + 1
    return tuple(components)


def arc_type(p: NCPartition) -> tuple[int, ...]:
    """Block sizes minus one, decreasing; blocks without arcs are omitted."""
    return tuple(sorted((len(b) - 1 for b in p.blocks if len(b) > 1), reverse=True))


def nc_predicates(p: NCPartition) -> dict:
    return {
        "noncrossing": is_noncrossing(p),
        "sparse": is_sparse(p),
        "components": connected_components(p),
        "arc_type": arc_type(p),
    }


def _require_large(path: LatticePath) -> None:
    spec = family_spec("large_fuss", path.n, path.k, path.k)
    if not is_member(path, spec):
        raise PathError("not a (k, k)-Fuss-Schroder path: %s" % path)


def step_label(path: LatticePath, step: str, y: int) -> int:
    """Label of an E step on the line y, or of a D step ending in row y.

    With i counted from the top, the row (n-i)k is labeled i(k+1) + 2 and
    the line y = (n-i)k + j with 0 <= j < k is labeled i(k+1) + 1 - j."""
    n, k = path.n, path.k
    if step == DIAG:
        if y % k:
            raise PathError("diagonal step ends in row %d, not a multiple of %d" % (y, k))
        return (n - y // k) * (k + 1) + 2
    j = y % k
    i = n - (y - j) // k
    return i * (k + 1) + 1 - j


def _labeled_steps(path: LatticePath) -> list[tuple[int, str]]:
    """(label, step kind) for every E and D step of the path."""
    out = []
    y = 0
    for s in path.steps:
        if s != NORTH:
            out.append((step_label(path, s, y + (s == DIAG)), s))
        if s != EAST:
            y += 1
    return out


def path_to_labels(path: LatticePath) -> tuple[int, ...]:
    """The weakly increasing label sequence of the E and D steps."""
    _require_large(path)
    return tuple(sorted(label for label, _ in _labeled_steps(path)))


def trace_to_partition(path: LatticePath) -> NCPartition:
    """Rewrite the label sequence into a sparse noncrossing partition of
    [2(k+1)n + 2].

    Starting from the sequence 1, 2, the labels are consumed in increasing
    order; a group of m equal E labels s first shifts every number above s
    up by m(k+1) and then expands the unique occurrence of s into the
    alternation s, s+1, s, s+2, ..., s, s+m(k+1), s; a D label does the
    same with m = 1.  Equal positions of the final sequence form the blocks."""
    _require_large(path)
    n, k = path.n, path.k
    labels = path_to_labels(path)
    # E labels never collide with D labels (they differ modulo k + 1), and
    # equal labels always come from one east run.
    kinds = dict(_labeled_steps(path))
    seq = [1, 2]
    idx = 0
    while idx < len(labels):
        s = labels[idx]
        m = 1
        while idx + m < len(labels) and labels[idx + m] == s:
            m += 1
        idx += m
        width = m * (k + 1) if kinds[s] == EAST else k + 1
        seq = [v + width if v > s else v for v in seq]
        pattern = [s]
        for step in range(1, width + 1):
            pattern.extend([s + step, s])
        pos = seq.index(s)
        seq[pos : pos + 1] = pattern
    assert len(seq) == 2 * (k + 1) * n + 2
    blocks = {}
    for position, number in enumerate(seq, start=1):
        blocks.setdefault(number, []).append(position)
    result = NCPartition.of(len(seq), blocks.values())
    assert len(result.blocks) == (k + 1) * n + 2
    return result


def small_partition(path: LatticePath) -> NCPartition:
    """The traced partition restricted to [2(k+1)n + 1], defined for small
    paths: the dropped last element must form a singleton second component."""
    traced = trace_to_partition(path)
    components = connected_components(traced)
    if len(components) != 2 or components[1] != (traced.m,):
        raise PathError(
            "the traced partition does not end with a singleton component; "
            "the path is not small"
        )
    return NCPartition.of(traced.m - 1, [b for b in traced.blocks if b != (traced.m,)])


def sparse_noncrossing_partitions(m: int) -> Iterator[NCPartition]:
    """All sparse noncrossing partitions of [m], by backtracking.

    Scanning 1..m with a stack of open blocks: each element either opens a
    new block on top of the stack, or closes any number of blocks for good
    and joins the block then on top (not one holding the previous element,
    for sparsity; joining below open blocks would cross them).  Closing only
    ever happens right before a join, which makes the choice sequence for a
    given partition unique."""
    if m < 0:
        raise PathError("ground set size must be nonnegative")

    blocks: list[list[int]] = []
    stack: list[int] = []

    def rec(x: int) -> Iterator[NCPartition]:
        if x > m:
            yield NCPartition.of(m, [list(b) for b in blocks])
            return
        blocks.append([x])
        stack.append(len(blocks) - 1)
        yield from rec(x + 1)
        stack.pop()
        blocks.pop()
        closed = []
        while stack:
            top = blocks[stack[-1]]
            if top[-1] != x - 1:
                top.append(x)
                yield from rec(x + 1)
                top.pop()
            closed.append(stack.pop())
        while closed:
            stack.append(closed.pop())

    yield from rec(1)


def _set_partitions(m: int) -> Iterator[NCPartition]:
    """Every set partition of [m] via restricted-growth strings."""

    def rec(x: int, blocks: list):
        if x > m:
            yield NCPartition.of(m, [list(b) for b in blocks])
            return
        for b in blocks:
            b.append(x)
            yield from rec(x + 1, blocks)
            b.pop()
        blocks.append([x])
        yield from rec(x + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def sparse_noncrossing_by_filter(m: int) -> list[NCPartition]:
    """Independent cross-check of the backtracking generator: filter all set
    partitions; usable for small m only."""
    return [p for p in _set_partitions(m) if is_noncrossing(p) and is_sparse(p)]
