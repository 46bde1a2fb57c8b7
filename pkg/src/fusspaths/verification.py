"""The oracle harness: every closed-form count is compared against brute
enumeration, the orbit structure of free paths is checked, and the two
conjectured bijections with sparse noncrossing partitions are tested
exhaustively at small sizes.

All checks return a VerifyReport instead of raising: a falsified property
becomes a structured counterexample, never a crash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .chung_feller import AnnotatedPath, flaw_count, orbit
from .counting import (
    dyck_by_type,
    free_paths_by_type,
    fuss_catalan_by_type,
    large_schroder_by_type,
    small_fuss_by_type,
    small_schroder_by_type,
)
from .bijections import shift_r
from .enumeration import count_by_type, enumerate_paths
from .noncrossing import (
    NCPartition,
    arc_type,
    connected_components,
    small_partition,
    sparse_noncrossing_partitions,
    trace_to_partition,
)
from .partitions import render_partition
from .paths import PathError, family_spec, is_member, path_type


@dataclass
class VerifyReport:
    """Outcome of one verification run: per-cell results plus witnesses."""

    subject: str
    checked_cells: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)

    @property
    def status(self) -> str:
        ok = not self.counterexamples and all(cell[-1] for cell in self.checked_cells)
        return "pass" if ok else "fail"

    def cell(self, key, expected, actual) -> None:
        self.checked_cells.append((key, expected, actual, expected == actual))
        if expected != actual:
            self.counterexamples.append(
                {"cell": key, "expected": expected, "actual": actual}
            )

    def witness(self, description: str, **data) -> None:
        self.counterexamples.append({"witness": description, **data})

    def to_json(self) -> str:
        return json.dumps(
            {
                "subject": self.subject,
                "status": self.status,
                "cells": [
                    {"key": key, "expected": exp, "actual": act, "pass": ok}
                    for key, exp, act, ok in self.checked_cells
                ],
                "counterexamples": self.counterexamples,
            },
            default=str,
        )

    def summary(self) -> str:
        return "%s: %s (%d cells, %d counterexamples)" % (
            self.subject,
            self.status,
            len(self.checked_cells),
            len(self.counterexamples),
        )


# Formula id -> (family used as the enumeration oracle, formula by type).
THEOREMS = {
    "dyck": ("dyck", lambda n, k, lam: dyck_by_type(n, lam)),
    "large-schroder": ("large_schroder", lambda n, k, lam: large_schroder_by_type(n, lam)),
    "small-schroder": ("small_schroder", lambda n, k, lam: small_schroder_by_type(n, lam)),
    "fuss-catalan": ("fuss_catalan", fuss_catalan_by_type),
    "small-fuss": ("small_fuss", small_fuss_by_type),
    "free": ("free", free_paths_by_type),
}


def verify_theorem(theorem_id: str, max_n: int, max_k: int) -> VerifyReport:
    """Compare the closed-form count for every type against enumeration,
    over all n <= max_n, k <= max_k (r <= k where the family has one)."""
    if theorem_id not in THEOREMS:
        raise PathError("unknown theorem id %r" % theorem_id)
    family, formula = THEOREMS[theorem_id]
    report = VerifyReport(subject="theorem %s" % theorem_id)
    k_only_one = family in ("dyck", "large_schroder", "small_schroder")
    for n in range(1, max_n + 1):
        for k in range(1, (1 if k_only_one else max_k) + 1):
            r_values = range(1, k + 1) if family in ("small_fuss", "large_fuss") else [None]
            for r in r_values:
                table = count_by_type(family_spec(family, n, k, r))
                for lam, counted in table.sorted_items():
                    key = (n, k, r, render_partition(lam))
                    report.cell(key, formula(n, k, lam), counted)
    return report


def verify_r_independence(max_n: int, max_k: int) -> VerifyReport:
    """Count tables of the large and small families are identical for every
    r, and the r-shift round-trips through every large path."""
    report = VerifyReport(subject="r-independence")
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            for fam in ("large_fuss", "small_fuss"):
                base = count_by_type(family_spec(fam, n, k, 1)).sorted_items()
                for r in range(2, k + 1):
                    other = count_by_type(family_spec(fam, n, k, r)).sorted_items()
                    report.cell((fam, n, k, r), base, other)
            for i, j in combinations(range(1, k + 1), 2):
                src = family_spec("large_fuss", n, k, i)
                dst = family_spec("large_fuss", n, k, j)
                ok = True
                for p in enumerate_paths(src):
                    q = shift_r(p, i, j)
                    if not (
                        is_member(q, dst)
                        and path_type(q) == path_type(p)
                        and shift_r(q, j, i) == p
                    ):
                        ok = False
                        report.witness(
                            "r-shift failed to round-trip",
                            n=n, k=k, i=i, j=j, path=p.render(), image=q.render(),
                        )
                report.cell(("shift-round-trip", n, k, i, j), True, ok)
    return report


def verify_chung_feller(max_n: int, max_k: int) -> VerifyReport:
    """Free paths of each type split into orbits of size nk + 1, each with
    exactly one flawless member, which is a small path."""
    report = VerifyReport(subject="chung-feller")
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            seen: dict[tuple, int] = {}
            orbits = 0
            ok = True
            free = list(enumerate_paths(family_spec("free", n, k)))
            for p in free:
                if p.steps in seen:
                    continue
                members = orbit(AnnotatedPath.from_path(p))
                orbits += 1
                flawless = 0
                for m in members:
                    if m.path.steps in seen:
                        ok = False
                        report.witness(
                            "orbits overlap", n=n, k=k, path=m.path.render()
                        )
                    seen[m.path.steps] = orbits
                    total = flaw_count(m).total
                    if total == 0:
                        flawless += 1
                        if not is_member(m.path, family_spec("small_fuss", n, k, k)):
                            ok = False
                            report.witness(
                                "flawless member is not a small path",
                                n=n, k=k, path=m.path.render(),
                            )
                    if path_type(m.path) != path_type(p):
                        ok = False
                        report.witness(
                            "orbit member changes type", n=n, k=k, path=m.path.render()
                        )
                if flawless != 1:
                    ok = False
                    report.witness(
                        "orbit lacks a unique flawless member",
                        n=n, k=k, path=p.render(), flawless=flawless,
                    )
            report.cell(("paths covered", n, k), len(free), len(seen))
            report.cell(("orbit count", n, k), len(free) // (n * k + 1), orbits)
            report.cell(("orbits well-formed", n, k), True, ok)
    return report


def _conjecture_lambda(p: NCPartition, n: int, k: int) -> tuple[int, ...] | None:
    """The type a qualifying partition asserts, or None if the partition
    fails the conjecture's structural conditions.

    Condition (2) fixes which blocks carry the diagonal steps: among the
    blocks with index i(k+1) + 2 (0 <= i < n, blocks ordered by smallest
    element), exactly the non-singletons must have k + 1 arcs each, and
    their count determines n - |lambda|.  Condition (1) then says the
    remaining arcs are (k+1) times the parts of lambda, and condition (3)
    bounds the singletons among every suffix of t(k+1) blocks."""
    special = [p.blocks[i * (k + 1) + 1] for i in range(n)]
    if any(len(b) not in (1, k + 2) for b in special):
        return None
    diag_blocks = sum(1 for b in special if len(b) == k + 2)
    size = n - diag_blocks  # |lambda|
    if sum(1 for b in special if len(b) == 1) != size:
        return None
    arcs = list(arc_type(p))
    if any(a % (k + 1) for a in arcs):
        return None
    for _ in range(diag_blocks):
        if (k + 1) not in arcs:
            return None
        arcs.remove(k + 1)
    lam = tuple(sorted((a // (k + 1) for a in arcs), reverse=True))
    if sum(lam) != size:
        return None
    total = len(p.blocks)
    singleton_flags = [len(b) == 1 for b in p.blocks]
    for t in range(1, total // (k + 1) + 1):
        if sum(singleton_flags[total - t * (k + 1) :]) < t * (k - 1) + 1:
            return None
    return lam


def conjecture_partitions(which: int, n: int, k: int) -> dict[tuple[int, ...], list]:
    """The conjecture's right-hand side, grouped by the type it asserts:
    sparse noncrossing partitions of [2(k+1)n + 2] with two connected
    components (which=1), or of [2(k+1)n + 1] connected (which=2),
    satisfying the three structural conditions."""
    if which not in (1, 2):
        raise PathError("conjecture id must be 1 or 2")
    m = 2 * (k + 1) * n + 2 - (which == 2)
    want_components = 2 if which == 1 else 1
    grouped: dict[tuple[int, ...], list] = {}
    for p in sparse_noncrossing_partitions(m):
        if len(connected_components(p)) != want_components:
            continue
        lam = _conjecture_lambda(p, n, k)
        if lam is not None:
            grouped.setdefault(lam, []).append(p)
    return grouped


def verify_conjecture(which: int, n: int, k: int) -> VerifyReport:
    """Test one conjectured bijection exhaustively: the traced partition of
    every path must land in the qualifying set of its own type, the map
    must be injective, and per-type cardinalities must agree."""
    if (k + 1) * n > 9:
        raise PathError("ground set too large for exhaustive generation")
    report = VerifyReport(subject="conjecture %d (n=%d, k=%d)" % (which, n, k))
    family = "large_fuss" if which == 1 else "small_fuss"
    trace = trace_to_partition if which == 1 else small_partition
    rhs = conjecture_partitions(which, n, k)
    images: dict[tuple[int, ...], set] = {}
    seen: dict[str, str] = {}
    for p in enumerate_paths(family_spec(family, n, k, k)):
        lam = path_type(p)
        traced = trace(p)
        key = str(traced)
        if key in seen:
            report.witness(
                "tracing is not injective", paths=[seen[key], p.render()], image=key
            )
        seen[key] = p.render()
        if traced not in rhs.get(lam, []):
            report.witness(
                "traced partition does not qualify for its type",
                path=p.render(), type=render_partition(lam), image=key,
            )
        images.setdefault(lam, set()).add(key)
    for lam in sorted(set(rhs) | set(images), key=lambda t: (sum(t), t)):
        report.cell(
            ("cardinality", render_partition(lam)),
            len(rhs.get(lam, [])),
            len(images.get(lam, set())),
        )
    return report
