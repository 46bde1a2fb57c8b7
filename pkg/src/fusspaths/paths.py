"""Lattice paths over the steps E, N, D and membership tests for each family.

A path runs from (0, 0) to (n, k*n) using east steps E = (1, 0), north steps
N = (0, 1), and diagonal steps D = (1, 1).  Families differ in whether the
path must stay weakly above y = k*x, which levels a diagonal step may cross,
and whether diagonal steps may touch y = k*x.
"""

from __future__ import annotations

from dataclasses import dataclass

EAST = "E"
NORTH = "N"
DIAG = "D"

#: Generation / comparison order of the step alphabet (E < N < D).
STEP_ORDER = {EAST: 0, NORTH: 1, DIAG: 2}

FAMILIES = (
    "dyck",
    "fuss_catalan",
    "large_schroder",
    "small_schroder",
    "large_fuss",
    "small_fuss",
    "free",
)


class PathError(ValueError):
    """Malformed path text, dimension mismatch, or invalid family spec."""


@dataclass(frozen=True)
class LatticePath:
    """Immutable step sequence from (0, 0) to (n, k*n)."""

    steps: tuple[str, ...]
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise PathError("n must be a positive integer")
        if self.k < 1:
            raise PathError("k must be a positive integer")
        bad = set(self.steps) - {EAST, NORTH, DIAG}
        if bad:
            raise PathError("illegal step characters: %s" % ", ".join(sorted(bad)))
        easts = self.steps.count(EAST)
        diags = self.steps.count(DIAG)
        norths = self.steps.count(NORTH)
        if easts + diags != self.n:
            raise PathError(
                "horizontal displacement %d != n = %d" % (easts + diags, self.n)
            )
        if norths + diags != self.k * self.n:
            raise PathError(
                "vertical displacement %d != k*n = %d"
                % (norths + diags, self.k * self.n)
            )

    def points(self) -> list[tuple[int, int]]:
        """All lattice points visited, from (0, 0) to (n, k*n)."""
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s != NORTH:
                x += 1
            if s != EAST:
                y += 1
            pts.append((x, y))
        return pts

    def render(self) -> str:
        return "".join(self.steps)

    def lex_key(self) -> tuple[int, ...]:
        """Sort key realizing the E < N < D order."""
        return tuple(STEP_ORDER[s] for s in self.steps)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class FamilySpec:
    """A path family: class name plus the dimensions (n, k) and level offset r."""

    family: str
    n: int
    k: int = 1
    r: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PathError("unknown family %r" % (self.family,))
        if self.n < 1 or self.k < 1:
            raise PathError("n and k must be positive")
        if not 1 <= self.r <= self.k:
            raise PathError("r must satisfy 1 <= r <= k")
        if self.family in ("dyck", "large_schroder", "small_schroder") and self.k != 1:
            raise PathError("%s requires k = 1" % self.family)
        if self.family == "free" and self.r != self.k:
            raise PathError("free requires r = k")


def family_spec(family: str, n: int, k: int = 1, r: int | None = None) -> FamilySpec:
    """Build a FamilySpec, defaulting r to k for the free class and 1 otherwise."""
    if r is None:
        r = k if family == "free" else 1
    return FamilySpec(family=family, n=n, k=k, r=r)


def parse_path(text: str, n: int, k: int) -> LatticePath:
    """Parse a path string (one character per step) and validate displacements."""
    return LatticePath(steps=tuple(text), n=n, k=k)


def path_type(path: LatticePath) -> tuple[int, ...]:
    """The type of a path: maximal east-run lengths, weakly decreasing."""
    runs = []
    current = 0
    for s in path.steps:
        if s == EAST:
            current += 1
        elif current:
            runs.append(current)
            current = 0
    if current:
        runs.append(current)
    return tuple(sorted(runs, reverse=True))


def _stays_weakly_above(path: LatticePath) -> bool:
    k = path.k
    return all(y >= k * x for x, y in path.points())


def is_member(path: LatticePath, spec: FamilySpec) -> bool:
    """Whether the path belongs to the family described by spec.

    Dimension mismatches raise; on matching dimensions the test is total.
    """
    if path.n != spec.n or path.k != spec.k:
        raise PathError("path dimensions (%d, %d) do not match spec" % (path.n, path.k))
    k, r, n = spec.k, spec.r, spec.n

    if spec.family == "free":
        # Diagonal steps confined to the rows i*k for 2 <= i <= n; the path
        # may dip below y = k*x.
        x = y = 0
        for s in path.steps:
            if s == DIAG:
                end = y + 1
                if end % k != 0 or not 2 * k <= end <= n * k:
                    return False
            if s != NORTH:
                x += 1
            if s != EAST:
                y += 1
        return True

    if spec.family in ("dyck", "fuss_catalan"):
        return DIAG not in path.steps and _stays_weakly_above(path)

    # Schroder classes are the k = 1 Fuss classes.  A diagonal step enters
    # some level tk + r and opens a window that lasts until the path first
    # reaches the level (t+1)k; inside the window the path may run one
    # column right of the boundary (y >= k(x-1) instead of y >= kx), which
    # makes the family the image of the r = k family under the r-shift.
    # The diagonal "touches the line y = kx" exactly when the point closing
    # its window lies on the line; small paths exclude those diagonals.
    small = spec.family in ("small_schroder", "small_fuss")
    x = y = 0
    window = False
    for s in path.steps:
        if s == DIAG and y % k != (r - 1) % k:
            return False
        if s != NORTH:
            x += 1
        if s != EAST:
            y += 1
        if s != EAST and window and y % k == 0:
            window = False
            if small and y == k * x:
                return False
        elif s == DIAG:
            if y % k == 0:  # r = k: the window closes on the spot
                if small and y == k * x:
                    return False
            else:
                window = True
        if y < k * (x - 1 if window else x):
            return False
    return True
