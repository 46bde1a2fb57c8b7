"""Exhaustive generation of every path in a family, and count tables by type.

Generation is deterministic (lexicographic in the step order E < N < D) so
that golden outputs are stable.  The generated sets are the oracle against
which every closed-form count is verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator

from .partitions import partition_sort_key, partitions_with_bounds
from .paths import DIAG, EAST, NORTH, FamilySpec, LatticePath, path_type


@dataclass
class CountTable:
    """Counts of a family's paths grouped by type."""

    spec: FamilySpec
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.entries.items(), key=lambda kv: partition_sort_key(kv[0]))


def _dfs(spec: FamilySpec) -> Iterator[LatticePath]:
    n, k, r = spec.n, spec.k, spec.r
    family = spec.family
    top = k * n
    above = family != "free"
    allow_diag = family not in ("dyck", "fuss_catalan")
    small = family in ("small_schroder", "small_fuss")

    steps: list[str] = []

    # For non-free families, a diagonal step entering level tk + r with
    # r < k opens a window until the path first reaches level (t+1)k;
    # points strictly inside the window may dip one column past the
    # boundary (y >= k(x-1)), and small paths exclude diagonals whose
    # window-closing point lies on the line y = kx.
    def rec(x: int, y: int, window: bool) -> Iterator[LatticePath]:
        if x == n and y == top:
            yield LatticePath(steps=tuple(steps), n=n, k=k)
            return
        # E
        if x < n and (not above or y >= k * (x + 1 if not window else x)):
            steps.append(EAST)
            yield from rec(x + 1, y, window)
            steps.pop()
        # N
        if y < top:
            closes = window and (y + 1) % k == 0
            ok = True
            if closes:
                if y + 1 < k * x or (small and y + 1 == k * x):
                    ok = False
            if ok:
                steps.append(NORTH)
                yield from rec(x, y + 1, window and not closes)
                steps.pop()
        # D
        if allow_diag and x < n and y < top:
            ok = True
            opens = False
            if family == "free":
                end = y + 1
                ok = end % k == 0 and 2 * k <= end
            else:
                if y % k != (r - 1) % k:
                    ok = False
                elif (y + 1) % k == 0:
                    # r = k: the window closes on the spot
                    if above and y + 1 < k * (x + 1):
                        ok = False
                    if small and y + 1 == k * (x + 1):
                        ok = False
                else:
                    opens = above
                    if above and y + 1 < k * x:
                        ok = False
            if ok:
                steps.append(DIAG)
                yield from rec(x + 1, y + 1, opens)
                steps.pop()

    yield from rec(0, 0, False)


def free_paths_from_encoding(n: int, k: int) -> list[LatticePath]:
    """Every free path, built from its defining data: the type, the set of
    diagonal rows, the east-run lines, and the ordering of the runs.

    A free path of type lambda is equivalent to a choice of n - |lambda|
    diagonal rows among 2k, 3k, ..., nk, a set of l(lambda) horizontal lines
    among the nk + 1 available, and one of the l!/m_lambda distinct
    orderings of the runs along those lines.
    """
    rows = [i * k for i in range(2, n + 1)]
    paths = []
    for parts in partitions_with_bounds(n, n * k + 1):
        size = sum(parts)
        if size < 1 or size > n:
            continue
        if n - size > len(rows):
            continue
        for diag_rows in combinations(rows, n - size):
            diag_set = set(diag_rows)
            for lines in combinations(range(n * k + 1), len(parts)):
                for arrangement in sorted(set(permutations(parts))):
                    run_at = dict(zip(lines, arrangement))
                    steps = []
                    for y in range(n * k + 1):
                        if y in run_at:
                            steps.extend([EAST] * run_at[y])
                        if y < n * k:
                            steps.append(DIAG if y + 1 in diag_set else NORTH)
                    paths.append(LatticePath(steps=tuple(steps), n=n, k=k))
    paths.sort(key=LatticePath.lex_key)
    return paths


def enumerate_paths(spec: FamilySpec) -> Iterator[LatticePath]:
    """Every member of the family exactly once, in lexicographic order
    (E < N < D).  The free class is generated from its run/row encoding;
    all other classes by depth-first search with prefix pruning."""
    if spec.family == "free":
        yield from free_paths_from_encoding(spec.n, spec.k)
    else:
        yield from _dfs(spec)


def brute_force_paths(spec: FamilySpec) -> list[LatticePath]:
    """Prefix-pruned search for any family, including free; independent of
    the encoding-based generator and used to cross-check it."""
    return list(_dfs(spec))


def count_by_type(spec: FamilySpec) -> CountTable:
    table = CountTable(spec=spec)
    for path in enumerate_paths(spec):
        t = path_type(path)
        table.entries[t] = table.entries.get(t, 0) + 1
    return table
