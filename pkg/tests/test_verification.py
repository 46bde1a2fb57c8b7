import json

import pytest

from fusspaths.paths import PathError
from fusspaths.verification import (
    VerifyReport,
    conjecture_partitions,
    verify_chung_feller,
    verify_conjecture,
    verify_r_independence,
    verify_theorem,
)


def test_report_mechanics():
    report = VerifyReport(subject="demo")
    report.cell(("a",), 1, 1)
    assert report.status == "pass"
    report.cell(("b",), 1, 2)
    assert report.status == "fail"
    payload = json.loads(report.to_json())
    assert payload["status"] == "fail"
    assert payload["counterexamples"][0]["cell"] == ["b"]
    assert "demo: fail" in report.summary()


def test_theorem_reports_pass():
    for theorem_id in (
        "dyck",
        "large-schroder",
        "small-schroder",
        "fuss-catalan",
        "small-fuss",
        "free",
    ):
        report = verify_theorem(theorem_id, 3, 2)
        assert report.status == "pass", report.to_json()
        assert report.checked_cells
    with pytest.raises(PathError):
        verify_theorem("nonesuch", 2, 2)


def test_theorem_spot_cells():
    report = verify_theorem("small-fuss", 4, 2)
    cells = {key: actual for key, _, actual, _ in report.checked_cells}
    assert cells[(4, 2, 1, "2,1")] == 24
    report = verify_theorem("dyck", 3, 1)
    cells = {key: actual for key, _, actual, _ in report.checked_cells}
    assert cells[(3, 1, None, "2,1")] == 3
    report = verify_theorem("free", 4, 2)
    cells = {key: actual for key, _, actual, _ in report.checked_cells}
    assert cells[(4, 2, None, "2,1")] == 216


def test_r_independence_report():
    report = verify_r_independence(3, 3)
    assert report.status == "pass", report.to_json()


def test_chung_feller_report():
    report = verify_chung_feller(3, 2)
    assert report.status == "pass", report.to_json()
    cells = {key: actual for key, _, actual, _ in report.checked_cells}
    assert cells[("orbit count", 1, 2)] == 1


def test_conjecture_rhs_small_case():
    # n=1, k=2: one small path (NNE) and one qualifying partition of [7]
    grouped = conjecture_partitions(2, 1, 2)
    assert sum(len(v) for v in grouped.values()) == 1
    # n=1, k=1 large side: two qualifying partitions of [6]
    grouped = conjecture_partitions(1, 1, 1)
    flat = [p for group in grouped.values() for p in group]
    assert len(flat) == 2
    assert any(p.blocks == ((1,), (2, 4, 6), (3,), (5,)) for p in flat)


@pytest.mark.parametrize(
    "which,n,k",
    [(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1), (1, 1, 2), (2, 1, 2), (1, 2, 2), (2, 2, 2)],
)
def test_conjectures_hold_at_small_sizes(which, n, k):
    report = verify_conjecture(which, n, k)
    assert report.status == "pass", report.to_json()
    assert report.checked_cells


def test_conjecture_size_guard():
    with pytest.raises(PathError):
        verify_conjecture(1, 5, 3)
    with pytest.raises(PathError):
        conjecture_partitions(3, 1, 1)
