import pytest

from fusspaths.chung_feller import (
    AnnotatedPath,
    FlawRuleError,
    ShiftError,
    add_flaw,
    circular_shift,
    flaw_count,
    orbit,
    parse_annotated,
    remove_flaw,
)
from fusspaths.enumeration import enumerate_paths
from fusspaths.paths import family_spec, is_member, parse_path, path_type


def ap(text, n, k):
    return AnnotatedPath.from_path(parse_path(text, n, k))


FLAW_GOLDENS = [
    ("NNNNNNENDEE", 4, 2, 0),
    ("NNNNNNENEED", 4, 2, 1),
    ("NNNNNDNENEE", 4, 2, 0),
    ("NNNNNEDNEEN", 4, 2, 1),
    ("ENNNDEENNNN", 4, 2, 8),
    ("ENNNDNNNNEE", 4, 2, 4),
    ("NNNEENENNND", 4, 2, 5),
    ("ENNNDNNNEEN", 4, 2, 5),
    ("NNEENENNNND", 4, 2, 6),
]


@pytest.mark.parametrize("text,n,k,flaws", FLAW_GOLDENS)
def test_flaw_count_goldens(text, n, k, flaws):
    assert flaw_count(ap(text, n, k)).total == flaws


def test_flaw_report_reasons():
    report = flaw_count(ap("EENNNN", 2, 2))
    assert report.total == 4
    assert [r for _, r in report.per_step] == [None, None] + ["N_below_line"] * 4
    report = flaw_count(ap("ENNNDEENNNN", 4, 2))
    reasons = {r for _, r in report.per_step if r}
    assert reasons == {"N_below_line", "D_below_shifted_line", "N_induced_by_flawed_D"}


def test_non_free_path_rejected():
    with pytest.raises(Exception):
        flaw_count(ap("NDNNENNENNE", 4, 2))  # diagonal into row k


def test_circular_shift_goldens():
    p = ap("ENNNDNNNNEE", 4, 2)
    assert circular_shift(p, 2).path.render() == "NNNNEEENNND"
    assert circular_shift(p, 0) == p
    # shifting can cut an east run or strand a diagonal on a bad row
    with pytest.raises(ShiftError):
        circular_shift(ap("ENNNDEENNNN", 4, 2), 1)
    with pytest.raises(ShiftError):
        circular_shift(ap("ENNNDEENNNN", 4, 2), 3)


def test_shift_keeps_run_identities_distinct():
    # after two shifts the 2-run and 1-run become adjacent but stay distinct
    p = circular_shift(ap("ENNNDNNNNEE", 4, 2), 2)
    assert p.render() == "NNNNEE|ENNND"
    assert p.run_lengths == (2, 1)
    assert p.run_lengths == parse_annotated(p.render(), 4, 2).run_lengths


ADD_GOLDENS = [
    ("NNNNNNENDEE", "NNNNNNENEED"),
    ("NNNNNDNENEE", "NNNNNEDNEEN"),
    ("ENNNDNNNNEE", "NNNEENENNND"),
    ("ENNNDNNNEEN", "NNEENENNNND"),
]


@pytest.mark.parametrize("before,after", ADD_GOLDENS)
def test_add_and_remove_flaw_goldens(before, after):
    up = add_flaw(ap(before, 4, 2))
    assert up.path.render() == after
    assert remove_flaw(up).path.render() == before


def test_flaw_chain_n1_k2():
    c0 = ap("NNE", 1, 2)
    c1 = add_flaw(c0)
    c2 = add_flaw(c1)
    assert (c1.path.render(), c2.path.render()) == ("NEN", "ENN")
    assert remove_flaw(c2).path.render() == "NEN"
    assert remove_flaw(c1).path.render() == "NNE"
    with pytest.raises(FlawRuleError):
        add_flaw(c2)  # already at the maximum of nk flaws
    with pytest.raises(FlawRuleError):
        remove_flaw(c0)  # nothing to remove


def test_orbit_golden():
    members = orbit(ap("NEN", 1, 2))
    assert [m.path.render() for m in members] == ["NNE", "NEN", "ENN"]


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3)])
def test_add_remove_are_mutually_inverse(n, k):
    small = family_spec("small_fuss", n, k, k)
    for p in enumerate_paths(family_spec("free", n, k)):
        a = AnnotatedPath.from_path(p)
        f = flaw_count(a).total
        assert (f == 0) == is_member(p, small)
        if f < n * k:
            up = add_flaw(a)
            assert flaw_count(up).total == f + 1
            assert path_type(up.path) == path_type(p)
            assert remove_flaw(up) == a
        if f > 0:
            down = remove_flaw(a)
            assert flaw_count(down).total == f - 1
            assert path_type(down.path) == path_type(p)
            assert add_flaw(down) == a


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (4, 1), (2, 3)])
def test_orbits_partition_free_paths(n, k):
    paths = list(enumerate_paths(family_spec("free", n, k)))
    assigned = {}
    for p in paths:
        if p.steps in assigned:
            continue
        members = orbit(AnnotatedPath.from_path(p))
        assert len(members) == n * k + 1
        assert sum(1 for m in members if flaw_count(m).total == 0) == 1
        root = members[0].path.steps
        for m in members:
            assert m.path.steps not in assigned
            assigned[m.path.steps] = root
    assert len(assigned) == len(paths)
