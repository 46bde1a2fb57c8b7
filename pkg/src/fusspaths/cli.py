"""Command-line front end: counting, enumeration, flaw machinery, the
r-shift, the tracing map, and the verification harness.

Exit status: 0 on success or a passing verification, 1 when a verification
fails or finds a counterexample, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chung_feller import (
    AnnotatedPath,
    FlawRuleError,
    ShiftError,
    add_flaw,
    flaw_count,
    orbit,
    remove_flaw,
)
from .bijections import shift_r
from .counting import (
    dyck_by_type,
    free_paths_by_type,
    fuss_catalan_by_type,
    large_schroder_by_type,
    small_fuss_by_type,
    small_schroder_by_type,
)
from .enumeration import count_by_type, enumerate_paths
from .noncrossing import trace_to_partition
from .partitions import PartitionFormatError, parse_partition, render_partition
from .paths import PathError, family_spec, parse_path
from .verification import (
    verify_chung_feller,
    verify_conjecture,
    verify_r_independence,
    verify_theorem,
)

CLASSES = {
    "dyck": "dyck",
    "large-schroder": "large_schroder",
    "small-schroder": "small_schroder",
    "fuss-catalan": "fuss_catalan",
    "small-fuss": "small_fuss",
    "large-fuss": "large_fuss",
    "free": "free",
}

FORMULAS = {
    "dyck": lambda n, k, lam: dyck_by_type(n, lam),
    "large-schroder": lambda n, k, lam: large_schroder_by_type(n, lam),
    "small-schroder": lambda n, k, lam: small_schroder_by_type(n, lam),
    "fuss-catalan": fuss_catalan_by_type,
    "small-fuss": small_fuss_by_type,
    "free": free_paths_by_type,
}


def _add_dims(parser: argparse.ArgumentParser, with_r: bool = False) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, default=1)
    if with_r:
        parser.add_argument("--r", type=int, default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusspaths", description="Exact lattice-path combinatorics."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count paths of one type by closed form")
    p.add_argument("--class", dest="family", choices=sorted(CLASSES), required=True)
    _add_dims(p, with_r=True)
    p.add_argument("--type", dest="type_", required=True)

    p = sub.add_parser("count-table", help="full type -> count table")
    p.add_argument("--class", dest="family", choices=sorted(CLASSES), required=True)
    _add_dims(p, with_r=True)
    p.add_argument("--format", choices=("lines", "json", "csv"), default="lines")

    p = sub.add_parser("enumerate", help="list every path of a family")
    p.add_argument("--class", dest="family", choices=sorted(CLASSES), required=True)
    _add_dims(p, with_r=True)
    p.add_argument("--format", choices=("lines", "json"), default="lines")

    p = sub.add_parser("flaws", help="flaw count of a free path")
    _add_dims(p)
    p.add_argument("--path", required=True)
    p.add_argument("--format", choices=("lines", "json"), default="lines")

    p = sub.add_parser("flaw-step", help="apply the flaw add/remove rule once")
    p.add_argument("--direction", choices=("add", "remove"), required=True)
    _add_dims(p)
    p.add_argument("--path", required=True)

    p = sub.add_parser("orbit", help="the nk+1 paths equivalent to a free path")
    _add_dims(p)
    p.add_argument("--path", required=True)

    p = sub.add_parser("shift-r", help="carry a large path to another r")
    _add_dims(p)
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.add_argument("--path", required=True)

    p = sub.add_parser("to-partition", help="trace a path to its partition")
    _add_dims(p)
    p.add_argument("--path", required=True)

    p = sub.add_parser("verify", help="run a verification report")
    vsub = p.add_subparsers(dest="subject", required=True)

    v = vsub.add_parser("theorem")
    v.add_argument("--id", dest="theorem_id", choices=sorted(FORMULAS), required=True)
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--max-k", type=int, default=1)

    v = vsub.add_parser("r-independence")
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--max-k", type=int, default=1)

    v = vsub.add_parser("chung-feller")
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--max-k", type=int, default=1)

    v = vsub.add_parser("conjecture")
    v.add_argument("--id", dest="conjecture_id", type=int, choices=(1, 2), required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, default=1)

    return parser


def _run(args) -> int:
    if args.command == "count":
        lam = parse_partition(args.type_)
        if args.family in FORMULAS:
            value = FORMULAS[args.family](args.n, args.k, lam)
        else:
            table = count_by_type(
                family_spec(CLASSES[args.family], args.n, args.k, args.r)
            )
            value = table.entries.get(lam, 0)
        print(value)
        return 0

    if args.command == "count-table":
        table = count_by_type(family_spec(CLASSES[args.family], args.n, args.k, args.r))
        items = table.sorted_items()
        if args.format == "json":
            print(
                json.dumps(
                    [{"type": render_partition(t), "count": c} for t, c in items]
                )
            )
        elif args.format == "csv":
            print("type,count")
            for t, c in items:
                print('"%s",%d' % (render_partition(t), c))
        else:
            for t, c in items:
                print("%s\t%d" % (render_partition(t) or "-", c))
        return 0

    if args.command == "enumerate":
        spec = family_spec(CLASSES[args.family], args.n, args.k, args.r)
        rendered = [p.render() for p in enumerate_paths(spec)]
        if args.format == "json":
            print(json.dumps(rendered))
        else:
            for line in rendered:
                print(line)
        return 0

    path = parse_path(args.path, args.n, args.k)

    if args.command == "flaws":
        report = flaw_count(AnnotatedPath.from_path(path))
        print(report.to_json() if args.format == "json" else report.total)
        return 0

    if args.command == "flaw-step":
        step = add_flaw if args.direction == "add" else remove_flaw
        print(step(AnnotatedPath.from_path(path)).path.render())
        return 0

    if args.command == "orbit":
        for member in orbit(AnnotatedPath.from_path(path)):
            print(member.path.render())
        return 0

    if args.command == "shift-r":
        print(shift_r(path, args.src, args.dst).render())
        return 0

    if args.command == "to-partition":
        print(trace_to_partition(path).to_json())
        return 0

    raise AssertionError("unreachable command %r" % args.command)


def _run_verify(args) -> int:
    if args.subject == "theorem":
        report = verify_theorem(args.theorem_id, args.max_n, args.max_k)
    elif args.subject == "r-independence":
        report = verify_r_independence(args.max_n, args.max_k)
    elif args.subject == "chung-feller":
        report = verify_chung_feller(args.max_n, args.max_k)
    else:
        report = verify_conjecture(args.conjecture_id, args.n, args.k)
    print(report.summary())
    print(report.to_json())
    return 0 if report.status == "pass" else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        return _run(args)
    except (PathError, PartitionFormatError, FlawRuleError, ShiftError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
