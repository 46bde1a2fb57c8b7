"""Acceptance gate: one test per acceptance criterion, each printing a
single pass/fail line so the run reads as a checklist."""

import time
from itertools import combinations

import pytest

from fusspaths.chung_feller import AnnotatedPath, add_flaw, flaw_count, remove_flaw
from fusspaths.counting import (
    catalan_number,
    dyck_by_type,
    fuss_catalan_number,
    large_schroder_number,
    small_fuss_by_type,
    free_paths_by_type,
    small_schroder_number,
)
from fusspaths.bijections import shift_r
from fusspaths.enumeration import count_by_type, enumerate_paths
from fusspaths.noncrossing import NCPartition, path_to_labels, trace_to_partition
from fusspaths.paths import family_spec, is_member, parse_path, path_type
from fusspaths.verification import (
    verify_chung_feller,
    verify_conjecture,
    verify_r_independence,
    verify_theorem,
)


@pytest.fixture
def report(capsys):
    def emit(criterion, check):
        start = time.time()
        try:
            check()
        except BaseException:
            with capsys.disabled():
                print("criterion %s: FAIL" % criterion)
            raise
        with capsys.disabled():
            print("criterion %s: PASS (%.1fs)" % (criterion, time.time() - start))

    return emit


def test_criterion_1_formula_oracle_equality(report):
    def check():
        for theorem_id in (
            "dyck",
            "large-schroder",
            "small-schroder",
            "fuss-catalan",
            "small-fuss",
            "free",
        ):
            result = verify_theorem(theorem_id, 4, 3)
            assert result.status == "pass", result.to_json()
        assert {lam: dyck_by_type(3, lam) for lam in ((3,), (2, 1), (1, 1, 1))} == {
            (3,): 1,
            (2, 1): 3,
            (1, 1, 1): 1,
        }
        assert small_fuss_by_type(4, 2, (2, 1)) == 24
        assert free_paths_by_type(4, 2, (2, 1)) == 216 == 24 * (4 * 2 + 1)

    report("1 (formula/oracle equality, n<=4 k<=3 r<=k)", check)


def test_criterion_2_r_independence(report):
    def check():
        result = verify_r_independence(4, 3)
        assert result.status == "pass", result.to_json()
        # round trips again, explicitly over every enumerated large path
        for n in range(1, 5):
            for k in range(2, 4):
                for i, j in combinations(range(1, k + 1), 2):
                    for p in enumerate_paths(family_spec("large_fuss", n, k, i)):
                        assert shift_r(shift_r(p, i, j), j, i) == p

    report("2 (r-independence and shift round trips)", check)


def test_criterion_3_chung_feller_structure(report):
    def check():
        for max_n, max_k in ((4, 2), (3, 3)):
            result = verify_chung_feller(max_n, max_k)
            assert result.status == "pass", result.to_json()
        # per-type refinement at the spot value: 24 orbits of 9 for (2,1)
        per_type = {}
        for p in enumerate_paths(family_spec("free", 4, 2)):
            per_type.setdefault(path_type(p), []).append(p)
        assert len(per_type[(2, 1)]) == 216 == 24 * 9

    report("3 (orbit partition, n<=4 k<=2 and n<=3 k=3)", check)


def test_criterion_4_figure_flaw_goldens(report):
    def check():
        goldens = [
            ("NNNNNNENDEE", 0),
            ("NNNNNNENEED", 1),
            ("NNNNNDNENEE", 0),
            ("NNNNNEDNEEN", 1),
            ("ENNNDEENNNN", 8),
            ("ENNNDNNNNEE", 4),
            ("NNNEENENNND", 5),
            ("ENNNDNNNEEN", 5),
            ("NNEENENNNND", 6),
        ]
        for text, flaws in goldens:
            ap = AnnotatedPath.from_path(parse_path(text, 4, 2))
            assert flaw_count(ap).total == flaws, text
        for before, after in [
            ("NNNNNNENDEE", "NNNNNNENEED"),
            ("NNNNNDNENEE", "NNNNNEDNEEN"),
        ]:
            up = add_flaw(AnnotatedPath.from_path(parse_path(before, 4, 2)))
            assert up.path.render() == after
            assert remove_flaw(up).path.render() == before

    report("4 (figure golden vectors)", check)


def test_criterion_5_tracing_golden(report):
    def check():
        path = parse_path("NNNNNNENDEE", 4, 2)
        assert path_to_labels(path) == (1, 1, 2, 4)
        traced = trace_to_partition(path)
        assert traced.m == 26 and len(traced.blocks) == 14
        assert traced == NCPartition.of(
            26,
            [
                [1, 15, 17, 19, 21, 23, 25],
                [2, 4, 12, 14],
                [3],
                [5, 7, 9, 11],
                [6],
                [8],
                [10],
                [13],
                [16],
                [18],
                [20],
                [22],
                [24],
                [26],
            ],
        )

    report("5 (tracing golden vector)", check)


def test_criterion_6_conjecture_harness(report):
    def check():
        for n, k in ((1, 1), (2, 1), (3, 1), (1, 2), (2, 2)):
            for which in (1, 2):
                result = verify_conjecture(which, n, k)
                # completion without a crash is the hard requirement; at
                # these sizes the conjectured bijections do hold
                assert result.status == "pass", result.to_json()
                assert result.checked_cells

    report("6 (conjecture harness, (n,k) grid)", check)


def test_criterion_7_totals_cross_checks(report):
    def check():
        assert [catalan_number(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
        assert [large_schroder_number(n) for n in range(5)] == [1, 2, 6, 22, 90]
        assert [small_schroder_number(n) for n in range(5)] == [1, 1, 3, 11, 45]
        for n in range(1, 6):
            assert count_by_type(family_spec("dyck", n)).total() == catalan_number(n)
        for n in range(1, 5):
            big = count_by_type(family_spec("large_schroder", n)).total()
            small = count_by_type(family_spec("small_schroder", n)).total()
            assert (big, small) == (large_schroder_number(n), small_schroder_number(n))
            for k in range(1, 4):
                total = count_by_type(family_spec("fuss_catalan", n, k)).total()
                assert total == fuss_catalan_number(n, k)

    report("7 (totals reproduce the named sequences)", check)
