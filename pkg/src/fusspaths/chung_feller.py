"""Flaw machinery on free paths: counting flawed steps, adding and removing
one flaw at a time, circular shifts, and orbit construction.

A free path (diagonal steps confined to the rows i*k for 2 <= i <= n) has a
number of flaws between 0 and nk, and the number is 0 exactly when the path
is a small (k, k)-Fuss-Schroder path.  The add/remove operations below are
mutually inverse and change the flaw count by exactly one while preserving
the path type, so they partition the free paths of each type into orbits of
size nk + 1, each containing exactly one small path.

East runs carry identities: after circular shifts two runs may become
adjacent on one horizontal line yet remain distinct, which the run-movement
rules rely on.  Path strings may mark a boundary between adjacent runs with
'|' between consecutive E characters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .paths import DIAG, EAST, NORTH, LatticePath, PathError, family_spec, is_member

#: Flaw reasons attached to steps.
N_BELOW_LINE = "N_below_line"
D_BELOW_SHIFTED_LINE = "D_below_shifted_line"
N_INDUCED_BY_FLAWED_D = "N_induced_by_flawed_D"


class FlawRuleError(ValueError):
    """Precondition failure of the add/remove rules."""


class ShiftError(ValueError):
    """A circular shift does not yield a free path."""


class _Run:
    """A movable east run; identity distinguishes runs sharing a line."""

    __slots__ = ("length",)

    def __init__(self, length: int):
        self.length = length


@dataclass(frozen=True)
class AnnotatedPath:
    """A free path together with its east steps partitioned into runs.

    run_lengths lists the identified runs in path order; consecutive runs
    may be adjacent in the step sequence (sharing a horizontal line) but
    a single run is always contiguous.
    """

    path: LatticePath
    run_lengths: tuple[int, ...]

    def __post_init__(self):
        if any(r < 1 for r in self.run_lengths):
            raise PathError("run lengths must be positive")
        # Each maximal E block must split exactly into whole runs.
        idx = 0
        block = 0
        for s in self.path.steps + (NORTH,):
            if s == EAST:
                block += 1
                continue
            while block:
                if idx >= len(self.run_lengths) or self.run_lengths[idx] > block:
                    raise PathError("run boundaries do not fit the east steps")
                block -= self.run_lengths[idx]
                idx += 1
        if idx != len(self.run_lengths):
            raise PathError("run lengths exceed the east steps")

    @classmethod
    def from_path(cls, path: LatticePath) -> "AnnotatedPath":
        """Annotate with the maximal east runs, the canonical annotation."""
        runs = []
        block = 0
        for s in path.steps + (NORTH,):
            if s == EAST:
                block += 1
            elif block:
                runs.append(block)
                block = 0
        return cls(path=path, run_lengths=tuple(runs))

    def render(self) -> str:
        """Step string with '|' between adjacent distinct runs."""
        out = []
        idx = 0
        remaining = 0
        for s in self.path.steps:
            if s == EAST:
                if remaining == 0:
                    if out and out[-1] == EAST:
                        out.append("|")
                    remaining = self.run_lengths[idx]
                    idx += 1
                out.append(EAST)
                remaining -= 1
            else:
                out.append(s)
        return "".join(out)

    def __str__(self) -> str:
        return self.render()


def parse_annotated(text: str, n: int, k: int) -> AnnotatedPath:
    """Parse a step string with optional '|' run separators."""
    steps = []
    runs = []
    block = 0
    for ch in text:
        if ch == "|":
            if block == 0:
                raise PathError("'|' must follow an east step")
            runs.append(block)
            block = 0
            continue
        if ch == EAST:
            block += 1
        else:
            if block:
                runs.append(block)
                block = 0
        steps.append(ch)
    if block:
        runs.append(block)
    path = LatticePath(steps=tuple(steps), n=n, k=k)
    return AnnotatedPath(path=path, run_lengths=tuple(runs))


@dataclass(frozen=True)
class FlawReport:
    """Per-step flaw decisions for a free path."""

    total: int
    per_step: tuple[tuple[str, str | None], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "total": self.total,
                "steps": [
                    {"step": s, "flawed": r is not None, "reason": r}
                    for s, r in self.per_step
                ],
            }
        )


def _require_free(ap: AnnotatedPath) -> None:
    spec = family_spec("free", ap.path.n, ap.path.k)
    if not is_member(ap.path, spec):
        raise PathError("not a free path: %s" % ap.path)


def _to_tokens(ap: AnnotatedPath) -> list:
    tokens = []
    idx = 0
    remaining = 0
    for s in ap.path.steps:
        if s == EAST:
            if remaining == 0:
                remaining = ap.run_lengths[idx]
                idx += 1
                tokens.append(_Run(remaining))
            remaining -= 1
        else:
            tokens.append(s)
    return tokens


def _from_tokens(tokens: list, n: int, k: int) -> AnnotatedPath:
    steps = []
    runs = []
    for t in tokens:
        if isinstance(t, _Run):
            steps.extend([EAST] * t.length)
            runs.append(t.length)
        else:
            steps.append(t)
    path = LatticePath(steps=tuple(steps), n=n, k=k)
    return AnnotatedPath(path=path, run_lengths=tuple(runs))


def _step_reasons(steps, n: int, k: int) -> list:
    """Flaw reason (or None) for each step of a free path."""
    # Locate flawed diagonal steps first; they induce flaws on north steps
    # in the k-1 rows directly beneath their row.
    coords = []
    x = y = 0
    for s in steps:
        coords.append((x, y))
        if s != NORTH:
            x += 1
        if s != EAST:
            y += 1
    flawed_d_rows = set()
    for s, (x, y) in zip(steps, coords):
        if s == DIAG and y + 1 < k * (x + 1) + k:
            flawed_d_rows.add(y + 1)
    reasons = []
    for s, (x, y) in zip(steps, coords):
        reason = None
        if s == DIAG:
            if y + 1 in flawed_d_rows:
                reason = D_BELOW_SHIFTED_LINE
        elif s == NORTH:
            if y < k * x:
                reason = N_BELOW_LINE
            else:
                row = y + 1
                if row % k:
                    anchor = (row // k + 1) * k
                    if anchor in flawed_d_rows and k * x <= y and y + 1 <= k * x + k:
                        reason = N_INDUCED_BY_FLAWED_D
        reasons.append(reason)
    return reasons


def _expand(tokens) -> list:
    steps = []
    for t in tokens:
        if isinstance(t, _Run):
            steps.extend([EAST] * t.length)
        else:
            steps.append(t)
    return steps


def _token_flaws(tokens, n: int, k: int) -> list:
    """Whether each token (a run counts as unflawed) is a flawed step."""
    reasons = _step_reasons(_expand(tokens), n, k)
    out = []
    pos = 0
    for t in tokens:
        if isinstance(t, _Run):
            out.append(False)
            pos += t.length
        else:
            out.append(reasons[pos] is not None)
            pos += 1
    return out


def _total(tokens, n: int, k: int) -> int:
    return sum(r is not None for r in _step_reasons(_expand(tokens), n, k))


def flaw_count(ap: AnnotatedPath) -> FlawReport:
    """Count the flawed steps of a free path, with per-step reasons.

    A diagonal step ending at (x, y) is flawed if y < kx + k; a north step
    from (x, y) is flawed if y < kx; and the north steps in the k-1 rows
    under a flawed diagonal row, between y = kx and y = kx + k, are flawed
    by induction.
    """
    _require_free(ap)
    steps = ap.path.steps
    reasons = _step_reasons(steps, ap.path.n, ap.path.k)
    per_step = tuple(zip(steps, reasons))
    return FlawReport(total=sum(r is not None for r in reasons), per_step=per_step)


def _rotate(tokens, m: int, n: int, k: int) -> list:
    """Cut the token sequence at the vertex (m, m*k) and swap the pieces;
    the result is the path translated by (-m, -m*k) modulo (n, kn)."""
    m %= n
    if m == 0:
        return list(tokens)
    cut = None
    x = y = 0
    for i, t in enumerate(tokens):
        if (x, y) == (m, m * k):
            cut = i
            break
        if isinstance(t, _Run):
            if y == m * k and x < m < x + t.length:
                raise ShiftError("circular shift would split an east run")
            x += t.length
        else:
            if t != NORTH:
                x += 1
            if t != EAST:
                y += 1
    if cut is None:
        raise ShiftError("disconnected: the path does not pass through (%d, %d)" % (m, m * k))
    out = tokens[cut:] + tokens[:cut]
    # The result must still be a free path: diagonal rows among 2k..nk.
    x = y = 0
    for t in out:
        if isinstance(t, _Run):
            x += t.length
        else:
            if t == DIAG and not 2 * k <= y + 1 <= n * k:
                raise ShiftError("circular shift puts a diagonal step in row %d" % (y + 1))
            if t != NORTH:
                x += 1
            if t != EAST:
                y += 1
    return out


def circular_shift(ap: AnnotatedPath, times: int) -> AnnotatedPath:
    """Apply the (-1, -k) circular shift `times` times (a single cut at the
    vertex (times mod n, k * (times mod n))); run identities survive the
    seam.  Raises ShiftError if the cut misses the path, splits a run, or
    leaves a diagonal step outside the allowed rows."""
    _require_free(ap)
    n, k = ap.path.n, ap.path.k
    return _from_tokens(_rotate(_to_tokens(ap), times, n, k), n, k)


def _run_positions(tokens) -> list:
    return [i for i, t in enumerate(tokens) if isinstance(t, _Run)]


def _qualifies_add(tokens, flawed, i: int, allow_end: bool = True) -> bool:
    """Whether the run at token index i anchors rule (add): it sits right
    before a diagonal step, an N-then-E pair, a flawed step, or the end."""
    if i == len(tokens) - 1:
        return allow_end
    nxt = tokens[i + 1]
    if nxt == DIAG or flawed[i + 1]:
        return True
    return nxt == NORTH and i + 2 < len(tokens) and isinstance(tokens[i + 2], _Run)


def _qualifies_shifted(tokens, flawed, i: int) -> bool:
    """Anchor test after a circular shift: as _qualifies_add but without the
    end-of-sequence case and with runs sharing a line with a neighbor run."""
    if i + 1 < len(tokens) and isinstance(tokens[i + 1], _Run):
        return True
    if i > 0 and isinstance(tokens[i - 1], _Run):
        return True
    return _qualifies_add(tokens, flawed, i, allow_end=False)


def _bounce(tokens, i: int, n: int, k: int) -> int:
    """The next anchored run to the right of index i, for restarting the
    leftward movement with the following east run."""
    flawed = _token_flaws(tokens, n, k)
    for j in _run_positions(tokens):
        if j > i and _qualifies_add(tokens, flawed, j):
            return j
    raise FlawRuleError("no east run left to move while adding a flaw")


def _end_on_line(tokens, i: int, k: int) -> bool:
    """Whether the end vertex of the run at index i lies on the line y = kx.

    A run sliding down through flawless territory first gains a flaw with
    the swap that takes its end vertex below y = kx, so the on-line position
    is the last flaw-neutral stop before the slide starts creating flaws."""
    x, y = _start_of(tokens, tokens[i])
    return y == k * (x + tokens[i].length)


def _move_left_until_one_more(tokens, i: int, target: int, n: int, k: int) -> None:
    """Slide the run at index i leftward, one swap at a time, until the path
    has `target` flaws.  While the count is still short, the run parks and
    the movement restarts with the next anchored run to the right whenever
    a flaw-neutral swap lands its end vertex on the line y = kx, passes a
    diagonal step, a flawed step, or an N-then-E pair, or when the next
    swap would make the run adjacent to another east run.  Once the count
    is reached the run may still owe movement (the restack after a circular
    shift can pre-pay the flaw): it then keeps sliding flaw-neutrally until
    any of the same parking positions."""
    total = _total(tokens, n, k)
    if total == target and _end_on_line(tokens, i, k):
        return
    while True:
        if i == 0:
            raise FlawRuleError("run reached the sequence start while adding a flaw")
        prev = tokens[i - 1]
        if isinstance(prev, _Run) or (i >= 2 and isinstance(tokens[i - 2], _Run)):
            # The next swap would make this run adjacent to another east run.
            if total == target:
                return
            i = _bounce(tokens, i, n, k)
            continue
        tokens[i - 1], tokens[i] = tokens[i], tokens[i - 1]
        i -= 1
        before, total = total, _total(tokens, n, k)
        if total > target:
            raise FlawRuleError("flaw count jumped to %d while moving left" % total)
        if total == target and total > before:
            return
        flawed = _token_flaws(tokens, n, k)
        passed = tokens[i + 1]
        parked = (
            passed == DIAG
            or flawed[i + 1]
            or (
                passed == NORTH
                and i + 2 < len(tokens)
                and isinstance(tokens[i + 2], _Run)
            )
        )
        if total == target:
            # The restack after a circular shift pre-paid the flaw; the run
            # still slides flaw-neutrally until it passes a diagonal step or
            # reaches the last flaw-neutral stop, its end vertex on y = kx.
            if passed == DIAG or _end_on_line(tokens, i, k):
                return
        elif parked:
            i = _bounce(tokens, i, n, k)


def add_flaw(ap: AnnotatedPath) -> AnnotatedPath:
    """The type-preserving successor with one more flaw."""
    _require_free(ap)
    n, k = ap.path.n, ap.path.k
    tokens = _to_tokens(ap)
    base = _total(tokens, n, k)
    if base >= n * k:
        raise FlawRuleError("path already has the maximum of %d flaws" % (n * k))
    target = base + 1
    flawed = _token_flaws(tokens, n, k)
    anchors = [i for i in _run_positions(tokens) if _qualifies_add(tokens, flawed, i)]
    if not anchors:
        raise FlawRuleError("no anchored east run found")
    i = anchors[0]
    if i > 0:
        _move_left_until_one_more(tokens, i, target, n, k)
        return _from_tokens(tokens, n, k)

    # The anchored run contains the first step: circular-shift preprocessing.
    # The largest feasible shift count is the one the removal rules invert:
    # it parks the displaced first run with its start vertex on y = kx while
    # keeping the later runs reachable by leftward moves.
    displaced = tokens[0]
    shifted = None
    for m in range(n - 1, 0, -1):
        try:
            candidate = _rotate(tokens, m, n, k)
        except ShiftError:
            continue
        if not isinstance(candidate[0], _Run):
            shifted = candidate
            break
    if shifted is None:
        raise FlawRuleError("no circular shift applies; the path has %d flaws" % base)
    tokens = shifted
    if _total(tokens, n, k) != base:
        raise FlawRuleError("circular shift changed the flaw count")

    # Restack: the runs from the displaced first run down to the one after
    # the leftmost anchored run (the s-th) each slide leftward toward their
    # predecessor run, rightmost first.  A slide stops on reaching the
    # predecessor (transient adjacency is allowed here), on hitting the
    # target flaw count, or right before a swap that would exceed it.
    # Afterwards the s-th run slides left in the ordinary way.
    flawed = _token_flaws(tokens, n, k)
    runs = [tokens[i] for i in _run_positions(tokens)]
    anchored = [
        idx
        for idx, pos in enumerate(_run_positions(tokens))
        if _qualifies_shifted(tokens, flawed, pos)
    ]
    if not anchored:
        raise FlawRuleError("no anchored east run after the circular shift")
    s = anchored[0]
    last = runs.index(displaced)
    if last < s:
        raise FlawRuleError("displaced run precedes the leftmost anchored run")
    for j in range(last, s, -1):
        i = tokens.index(runs[j])
        total = _total(tokens, n, k)
        while i > 0 and tokens[i - 1] is not runs[j - 1]:
            tokens[i - 1], tokens[i] = tokens[i], tokens[i - 1]
            i -= 1
            before, total = total, _total(tokens, n, k)
            if total > target:
                # Undo: this swap would overshoot the flaw budget.
                tokens[i], tokens[i + 1] = tokens[i + 1], tokens[i]
                i += 1
                total = before
                break
            if total == target and total > before:
                break
    _move_left_until_one_more(tokens, tokens.index(runs[s]), target, n, k)
    return _from_tokens(tokens, n, k)


def _move_right(
    tokens,
    i: int,
    n: int,
    k: int,
    stop_at_run: bool,
    mandatory_first: bool = True,
    flaw_neutral: bool = False,
) -> int:
    """Slide the run at index i rightward: optionally a mandatory first swap
    (passing the step it anchors), then further swaps until the next token
    is a diagonal step, a flawed step, an N-then-E pair, or (optionally)
    another east run; with flaw_neutral, also stop right before any swap
    that would change the flaw count.  Returns the final index."""
    first = mandatory_first
    while i < len(tokens) - 1:
        nxt = tokens[i + 1]
        if not first:
            if nxt == DIAG or isinstance(nxt, _Run):
                break
            if _token_flaws(tokens, n, k)[i + 1]:
                break
            if nxt == NORTH and i + 2 < len(tokens) and isinstance(tokens[i + 2], _Run):
                break
        elif isinstance(nxt, _Run) and not stop_at_run:
            raise FlawRuleError("east run collided with another while moving right")
        if flaw_neutral:
            before = _total(tokens, n, k)
            tokens[i], tokens[i + 1] = tokens[i + 1], tokens[i]
            if _total(tokens, n, k) != before:
                tokens[i], tokens[i + 1] = tokens[i + 1], tokens[i]
                break
            i += 1
        else:
            tokens[i], tokens[i + 1] = tokens[i + 1], tokens[i]
            i += 1
        first = False
    return i


def remove_flaw(ap: AnnotatedPath) -> AnnotatedPath:
    """The exact inverse of add_flaw: one fewer flaw, same type.

    The movement rules below invert the addition rules directly.  In the
    rare configurations after a closing circular shift where the local
    parking signatures do not pin down every resumed run, the result is
    checked by re-adding the flaw, and on a mismatch the predecessor is
    reconstructed from the movement invariants instead (see
    _remove_by_reconstruction)."""
    _require_free(ap)
    if _total(_to_tokens(ap), ap.path.n, ap.path.k) == 0:
        raise FlawRuleError("path has no flaw to remove")
    try:
        result = _remove_flaw_rule(ap)
    except FlawRuleError:
        result = None
    if result is not None:
        redone = add_flaw(result)
        if (
            redone.path.steps == ap.path.steps
            and redone.run_lengths == ap.run_lengths
        ):
            return result
    return _remove_by_reconstruction(ap)


def _remove_flaw_rule(ap: AnnotatedPath) -> AnnotatedPath:
    """Rule-based removal: undo the run movements of add_flaw."""
    n, k = ap.path.n, ap.path.k
    tokens = _to_tokens(ap)
    base = _total(tokens, n, k)
    if base == 0:
        raise FlawRuleError("path has no flaw to remove")

    # Move the run in front of the leftmost flawed step to the right.
    flawed = _token_flaws(tokens, n, k)
    f = flawed.index(True)
    if f == 0 or not isinstance(tokens[f - 1], _Run):
        raise FlawRuleError("no east run right before the leftmost flawed step")
    mover = tokens[f - 1]
    boundary = _move_right(tokens, f - 1, n, k, stop_at_run=True)

    # Secondary motion: runs parked mid-slide by the addition rules resume
    # moving right.  Two parking signatures, processed rightmost first: a run
    # sitting right before a flawless diagonal step (it passed the diagonal
    # without gaining a flaw), and a run separated from the preceding run by
    # a single north step (its next leftward swap would have made the two
    # runs adjacent).
    processed = set()
    while True:
        flawed = _token_flaws(tokens, n, k)
        candidate = None
        mandatory = False
        for i in _run_positions(tokens):
            if i >= boundary or tokens[i] is mover:
                break
            if id(tokens[i]) in processed:
                continue
            if not flawed[i + 1] and tokens[i + 1] == DIAG:
                candidate, mandatory = i, True
                continue
            if (
                i >= 2
                and tokens[i - 1] in (NORTH, DIAG)
                and isinstance(tokens[i - 2], _Run)
            ):
                candidate, mandatory = i, False
        if candidate is None:
            break
        boundary = candidate
        processed.add(id(tokens[candidate]))
        _move_right(tokens, candidate, n, k, stop_at_run=False, mandatory_first=mandatory)

    # A third signature exists only when a closing circular shift is coming
    # (two runs share a horizontal line): the restack after the opening
    # shift pre-paid the flaw and its run parked with its end vertex on the
    # line y = kx.  Such runs resume moving right before the shared lines
    # are resolved; runs already resting at a natural stop stay put.
    if any(
        isinstance(a, _Run) and isinstance(b, _Run)
        for a, b in zip(tokens, tokens[1:])
    ):
        flawed = _token_flaws(tokens, n, k)
        resumed = []
        for i in _run_positions(tokens):
            if i >= boundary or tokens[i] is mover:
                break
            if isinstance(tokens[i + 1], _Run) or (i and isinstance(tokens[i - 1], _Run)):
                continue
            if not _end_on_line(tokens, i, k):
                continue
            at_stop = (
                tokens[i + 1] == DIAG
                or flawed[i + 1]
                or (
                    tokens[i + 1] == NORTH
                    and i + 2 < len(tokens)
                    and isinstance(tokens[i + 2], _Run)
                )
            )
            if not at_stop:
                resumed.append(tokens[i])
        for run in reversed(resumed):
            _move_right(
                tokens,
                tokens.index(run),
                n,
                k,
                stop_at_run=True,
                mandatory_first=False,
                flaw_neutral=True,
            )

    # Same-line resolution and the closing circular shift: each right member
    # of a shared-line pair slides rightward toward a start vertex on the
    # line y = kx (or up to the next run); the last displaced run ends on
    # y = kx and the closing shift cuts the path right in front of it.
    applied_shared = False
    last_displaced = None
    idx = 0
    while idx < len(tokens) - 1:
        if isinstance(tokens[idx], _Run) and isinstance(tokens[idx + 1], _Run):
            applied_shared = True
            last_displaced = tokens[idx + 1]
            _slide_displaced(tokens, idx + 1, n, k)
        idx += 1
    if applied_shared:
        x0, y0 = _start_of(tokens, last_displaced)
        if y0 != k * x0 or x0 % n == 0:
            raise FlawRuleError(
                "displaced run start (%d, %d) is not a usable cut vertex" % (x0, y0)
            )
        tokens = _rotate(tokens, x0 % n, n, k)

    if _total(tokens, n, k) != base - 1:
        raise FlawRuleError("flaw removal did not decrease the count by one")
    return _from_tokens(tokens, n, k)


def _remove_by_reconstruction(ap: AnnotatedPath) -> AnnotatedPath:
    """Invert an addition that went through a circular shift by rebuilding
    the pre-shift configuration from the movement invariants.

    After the shift, the runs above the leftmost anchored one slide leftward
    in order, rightmost first.  A slide usually stops on the line its
    predecessor is about to leave, so in the result a relocated run usually
    sits exactly where its successor started; slides cut short by the flaw
    budget stop higher.  Each starting line therefore lies between the run's
    observed line and its successor's observed line, with the successor's
    line itself being the common case, and the displaced first run started
    on some seam line cut by the shift.  The ranges are small; exactly one
    assignment re-adds to the given path, and that one is returned."""
    n, k = ap.path.n, ap.path.k
    tokens = _to_tokens(ap)
    base = _total(tokens, n, k)
    runs = [tokens[i] for i in _run_positions(tokens)]
    last = len(runs) - 1
    lines = [_start_of(tokens, run)[1] for run in runs]
    # Vertical step (N or D) raising the path from row y-1 to row y; these
    # are unchanged by every run movement before the closing shift.
    vertical = {}
    y = 0
    for t in tokens:
        if not isinstance(t, _Run):
            y += 1
            vertical[y] = t

    def candidate(origins: list) -> AnnotatedPath | None:
        for j in range(last - 1):
            if origins[j] >= origins[j + 1]:
                return None
        if origins[last] < origins[last - 1]:
            return None
        seq = []
        for line in range(n * k + 1):
            if line:
                seq.append(vertical[line])
            for j, run in enumerate(runs):
                if origins[j] == line:
                    seq.append(run)
        x0, y0 = _start_of(seq, runs[last])
        if y0 != k * x0 or not 0 < x0 < n:
            return None
        try:
            original = _rotate(seq, x0, n, k)
        except ShiftError:
            return None
        if _total(original, n, k) != base - 1:
            return None
        result = _from_tokens(original, n, k)
        try:
            redone = add_flaw(result)
        except FlawRuleError:
            return None
        if (
            redone.path.steps == ap.path.steps
            and redone.run_lengths == ap.run_lengths
        ):
            return result
        return None

    # Every run starts at or above its observed line and at or below the
    # observed line of its successor (whose leftward slide stopped no lower
    # than this run's start); the chained value, the successor's observed
    # line itself, is the usual case, so ranges are scanned from above.
    def assign(j: int, origins: list):
        if j < 0:
            for seam in range(n * k, lines[last] - 1, -1):
                found = candidate(origins[:-1] + [seam])
                if found is not None:
                    yield found
            return
        hi = min(lines[j + 1], origins[j + 1] - 1) if j < last - 1 else lines[j + 1]
        for g in range(hi, lines[j] - 1, -1):
            origins[j] = g
            yield from assign(j - 1, origins)

    for found in assign(last - 1, list(lines)):
        return found
    raise FlawRuleError("no predecessor reproduces the path when re-adding a flaw")


def _start_of(tokens, run: _Run) -> tuple:
    x = y = 0
    for t in tokens:
        if t is run:
            return (x, y)
        if isinstance(t, _Run):
            x += t.length
        else:
            if t != NORTH:
                x += 1
            if t != EAST:
                y += 1
    raise FlawRuleError("run vanished from the sequence")


def _slide_displaced(tokens, i: int, n: int, k: int) -> None:
    """Move the run at index i rightward until its start vertex is a usable
    cut vertex on the line y = kx, or it sits immediately before another
    run, or it reaches the end of the sequence."""
    x, y = _start_of(tokens, tokens[i])
    while True:
        if y == k * x and 0 < x < n:
            try:
                _rotate(tokens, x, n, k)
                return
            except ShiftError:
                pass
        if i == len(tokens) - 1 or isinstance(tokens[i + 1], _Run):
            return
        passed = tokens[i + 1]
        tokens[i], tokens[i + 1] = tokens[i + 1], tokens[i]
        i += 1
        y += 1
        if passed == DIAG:
            x += 1


def orbit(ap: AnnotatedPath) -> list:
    """The full equivalence class of a free path: rewind to the unique
    0-flaw member, then add nk flaws one at a time; nk + 1 paths in flaw
    order."""
    _require_free(ap)
    n, k = ap.path.n, ap.path.k
    current = ap
    while flaw_count(current).total:
        current = remove_flaw(current)
    members = [current]
    for _ in range(n * k):
        current = add_flaw(current)
        members.append(current)
    if len({m.path.steps for m in members}) != n * k + 1:
        raise FlawRuleError("orbit members are not distinct")
    return members
