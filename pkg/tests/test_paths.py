import pytest

from fusspaths.paths import (
    LatticePath,
    PathError,
    family_spec,
    is_member,
    parse_path,
    path_type,
)


def test_displacement_validation():
    with pytest.raises(PathError):
        parse_path("EN", 2, 1)
    with pytest.raises(PathError):
        parse_path("NXE", 1, 1)
    p = parse_path("NED", 2, 1)
    assert p.points() == [(0, 0), (0, 1), (1, 1), (2, 2)]


def test_path_type_is_east_run_partition():
    assert path_type(parse_path("NENNNEEDNEEDNE", 8, 1)) == (2, 2, 1, 1)
    assert path_type(parse_path("NNE", 1, 2)) == (1,)
    assert path_type(parse_path("D", 1, 1)) == ()


def test_dyck_membership():
    dyck = family_spec("dyck", 3)
    assert is_member(parse_path("NENENE", 3, 1), dyck)
    assert not is_member(parse_path("ENNENE", 3, 1), dyck)
    assert not is_member(parse_path("NEDNE", 3, 1), dyck)  # D not allowed


def test_small_forbids_diagonal_touching_the_line():
    small = family_spec("small_schroder", 2, 1, 1)
    large = family_spec("large_schroder", 2, 1, 1)
    touching = parse_path("DNE", 2, 1)
    assert is_member(touching, large) and not is_member(touching, small)
    away = parse_path("NDE", 2, 1)
    assert is_member(away, small)


def test_r_shifted_membership_window():
    # A diagonal entering level kt+r (r < k) may leave the path one column
    # past the boundary until the next multiple-of-k level is reached.
    dn = parse_path("DN", 1, 2)
    assert is_member(dn, family_spec("large_fuss", 1, 2, 1))
    assert not is_member(dn, family_spec("small_fuss", 1, 2, 1))
    assert not is_member(dn, family_spec("large_fuss", 1, 2, 2))
    nd = parse_path("ND", 1, 2)
    assert is_member(nd, family_spec("large_fuss", 1, 2, 2))
    assert not is_member(nd, family_spec("small_fuss", 1, 2, 2))
    # the window closes at the next multiple of k; east steps afterwards
    # are held to the plain boundary again
    below = parse_path("DNENN", 2, 2)
    assert not is_member(below, family_spec("large_fuss", 2, 2, 1))


def test_free_family_rows():
    free = family_spec("free", 4, 2)
    assert is_member(parse_path("ENNNDEENNNN", 4, 2), free)
    # diagonal into row 3 is not a multiple of k
    assert not is_member(parse_path("ENNDNEENNNN", 4, 2), free)
    # diagonal into row k is below the allowed 2k..nk range
    assert not is_member(parse_path("NDNNENNENNE", 4, 2), free)


def test_spec_validation():
    with pytest.raises(PathError):
        family_spec("nonesuch", 1)
    with pytest.raises(PathError):
        family_spec("small_fuss", 2, 2, 3)
    with pytest.raises(PathError):
        family_spec("dyck", 2, 2)
    with pytest.raises(PathError):
        is_member(parse_path("NE", 1, 1), family_spec("dyck", 2))
