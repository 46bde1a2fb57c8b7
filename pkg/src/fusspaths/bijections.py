"""The r-shift bijection between large (k, i)- and (k, j)-Fuss-Schroder
path families.

A large (k, r) path may use its diagonal steps only to enter the levels
kt + r.  Shifting r moves every diagonal step within its band of k levels:
where the path crosses level kt + i with a diagonal, the crossing of level
kt + j in the same band is necessarily a north step, and exchanging the two
step kinds yields a large (k, j) path of the same type.  The exchange keeps
every step at its position in the sequence, so applying the map back is the
identity.
"""

from __future__ import annotations

from .paths import DIAG, NORTH, LatticePath, PathError, family_spec, is_member


def _crossing_positions(path: LatticePath) -> dict[int, int]:
    """Map each level y to the index of the step rising from y - 1 to y."""
    crossings = {}
    y = 0
    for idx, s in enumerate(path.steps):
        if s != "E":
            y += 1
            crossings[y] = idx
    return crossings


def shift_r(path: LatticePath, i: int, j: int) -> LatticePath:
    """Carry a large (k, i)-Fuss-Schroder path to the large (k, j) family.

    Every diagonal step enters some level kt + i; it is exchanged with the
    north step entering level kt + j of the same band.  Type, length, and
    the number of diagonal steps are preserved, and shift_r(., j, i)
    inverts the map."""
    n, k = path.n, path.k
    if not (1 <= i <= k and 1 <= j <= k):
        raise PathError("column offsets must lie in 1..k, got %d and %d" % (i, j))
    if not is_member(path, family_spec("large_fuss", n, k, i)):
        raise PathError("not a large (%d, %d)-Fuss-Schroder path: %s" % (k, i, path))
    if i == j:
        return path
    steps = list(path.steps)
    crossings = _crossing_positions(path)
    for t in range(n):
        src = crossings[k * t + i]
        if steps[src] != DIAG:
            continue
        dst = crossings[k * t + j]
        assert steps[dst] == NORTH
        steps[src], steps[dst] = NORTH, DIAG
    result = LatticePath(steps=tuple(steps), n=n, k=k)
    assert is_member(result, family_spec("large_fuss", n, k, j))
    return result
