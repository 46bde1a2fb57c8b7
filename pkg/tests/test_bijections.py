from itertools import combinations

import pytest

from fusspaths.bijections import shift_r
from fusspaths.enumeration import enumerate_paths
from fusspaths.paths import PathError, family_spec, is_member, parse_path, path_type


def test_goldens():
    assert shift_r(parse_path("DN", 1, 2), 1, 2).render() == "ND"
    assert shift_r(parse_path("DNNNE", 2, 2), 1, 2).render() == "NDNNE"
    # no diagonal steps: nothing to move
    assert shift_r(parse_path("NNENNE", 2, 2), 1, 2).render() == "NNENNE"


def test_rejects_wrong_family():
    with pytest.raises(PathError):
        shift_r(parse_path("ND", 1, 2), 1, 2)  # an r=2 path offered as r=1
    with pytest.raises(PathError):
        shift_r(parse_path("DN", 1, 2), 0, 2)


def test_round_trip_and_bijection():
    for n in range(1, 4):
        for k in range(2, 4):
            for i, j in combinations(range(1, k + 1), 2):
                src = family_spec("large_fuss", n, k, i)
                dst = family_spec("large_fuss", n, k, j)
                images = set()
                domain = 0
                for p in enumerate_paths(src):
                    q = shift_r(p, i, j)
                    assert is_member(q, dst)
                    assert path_type(q) == path_type(p)
                    assert q.steps.count("D") == p.steps.count("D")
                    assert shift_r(q, j, i) == p
                    images.add(q.steps)
                    domain += 1
                codomain = sum(1 for _ in enumerate_paths(dst))
                assert len(images) == domain == codomain
