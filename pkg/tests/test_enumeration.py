from itertools import combinations

from fusspaths.enumeration import (
    brute_force_paths,
    count_by_type,
    enumerate_paths,
    free_paths_from_encoding,
)
from fusspaths.paths import LatticePath, family_spec, is_member, parse_path


def _all_step_sequences(n, k):
    def rec(x, y, acc):
        if x == n and y == k * n:
            yield "".join(acc)
            return
        if x < n:
            yield from rec(x + 1, y, acc + ["E"])
        if y < k * n:
            yield from rec(x, y + 1, acc + ["N"])
        if x < n and y < k * n:
            yield from rec(x + 1, y + 1, acc + ["D"])

    yield from rec(0, 0, [])


def test_dfs_agrees_with_membership_filter():
    for n in range(1, 4):
        for k in range(1, 4):
            for family in ("dyck", "fuss_catalan", "large_fuss", "small_fuss", "free"):
                if family == "dyck" and k != 1:
                    continue
                for r in range(1, k + 1):
                    spec = family_spec(family, n, k, k if family == "free" else r)
                    generated = [p.render() for p in enumerate_paths(spec)]
                    assert len(set(generated)) == len(generated)
                    filtered = [
                        s
                        for s in _all_step_sequences(n, k)
                        if is_member(parse_path(s, n, k), spec)
                    ]
                    assert sorted(generated) == sorted(filtered), (family, n, k, r)
                    if family in ("dyck", "fuss_catalan", "free"):
                        break  # r is irrelevant for these families


def test_free_encoding_agrees_with_brute_force():
    for n in range(1, 4):
        for k in range(1, 4):
            spec = family_spec("free", n, k)
            assert free_paths_from_encoding(n, k) == brute_force_paths(spec)


def test_enumeration_is_lexicographic():
    for spec in (family_spec("free", 3, 2), family_spec("small_fuss", 3, 2, 2)):
        listed = list(enumerate_paths(spec))
        assert listed == sorted(listed, key=LatticePath.lex_key)


def test_fuss_catalan_n2_k2_golden():
    spec = family_spec("fuss_catalan", 2, 2)
    assert [p.render() for p in enumerate_paths(spec)] == [
        "NNENNE",
        "NNNENE",
        "NNNNEE",
    ]


def test_count_table_totals():
    table = count_by_type(family_spec("free", 4, 2))
    assert table.total() == sum(c for _, c in table.sorted_items())
    assert table.entries[(2, 1)] == 216
