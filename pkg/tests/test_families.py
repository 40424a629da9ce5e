from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dumont.errors import LimitExceeded, OddInput
from dumont.families import (
    DumontKind,
    count_avoiders,
    extend_to_odd,
    generate,
    genocchi,
    genocchi_table,
    is_member,
    iter_members,
)
from dumont.perm import Symmetry, avoids_all, map_pattern_set, parse_permutation

P = parse_permutation
F1, F2, DL1, DL2 = DumontKind.FIRST, DumontKind.SECOND, DumontKind.DUMONT_LIKE_FIRST, DumontKind.DUMONT_LIKE_SECOND


def strs(perms):
    return [str(p) for p in perms]


def test_membership_examples():
    assert is_member(F1, P("2143"))
    assert not is_member(F1, P("3142"))
    assert is_member(F2, P("4132"))
    assert not is_member(F2, P("3421"))
    assert is_member(F2, P("21"))
    for kind in DumontKind:
        assert is_member(kind, ())


def test_kind_parse():
    assert DumontKind.parse("1") is F1
    assert DumontKind.parse("dl2") is DL2
    assert DumontKind.parse("second") is F2
    with pytest.raises(ValueError):
        DumontKind.parse("3")


def test_small_sets():
    assert strs(generate(F1, 2)) == ["2143", "3421", "4213"]
    assert strs(generate(F2, 2)) == ["2143", "3142", "4132"]
    assert strs(generate(F1, 1)) == strs(generate(F2, 1)) == ["21"]
    assert generate(F1, 0) == [()]


def test_first_kind_n3():
    d = strs(generate(F1, 3))
    assert len(d) == 17
    assert {"436215", "562143", "563421", "564213"} <= set(d)


@pytest.mark.parametrize("n", range(0, 5))
@pytest.mark.parametrize("kind", list(DumontKind))
def test_generation_matches_filter(kind, n, oracles):
    # the oracle reads the definitions directly; Dumont-like kinds go through
    # the symmetry that defines them
    def member(p):
        m = len(p) + 1
        if kind is F1:
            return oracles.first(p)
        if kind is F2:
            return oracles.second(p)
        if kind is DL1:
            return oracles.first(tuple(m - v for v in p))
        return oracles.second(tuple(m - v for v in reversed(p)))

    expected = sorted(p for p in permutations(range(1, 2 * n + 1)) if member(p))
    assert [tuple(p) for p in generate(kind, n)] == expected


def test_no_non_member_at_length_10(oracles):
    first, second = set(), set()
    for p in permutations(range(1, 11)):
        if oracles.first(p):
            first.add(p)
        if oracles.second(p):
            second.add(p)
    assert set(map(tuple, iter_members(F1, 5))) == first
    assert set(map(tuple, iter_members(F2, 5))) == second


@pytest.mark.parametrize("n", range(0, 7))
def test_lexicographic_and_valid(n):
    for kind in (F1, F2):
        out = generate(kind, n)
        assert out == sorted(out)
        assert all(is_member(kind, p) for p in out)


def test_deterministic():
    assert generate(F1, 4) == generate(F1, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_first_kind_facts(n):
    for p in generate(F1, n):
        i = p.index(2)
        assert p[i + 1] == 1
        j = p.index(2 * n - 1)
        assert j == 2 * n - 1 or p[j + 1] == 2 * n


@pytest.mark.parametrize("n", range(1, 7))
def test_second_kind_facts(n):
    for p in generate(F2, n):
        assert p[1] == 1
        assert p[2 * n - 2] in (2 * n - 1, 2 * n)


def test_genocchi():
    assert [genocchi(k) for k in range(1, 10)] == [1, 1, 3, 17, 155, 2073, 38227, 929569, 28820619]
    table = genocchi_table(6)
    assert table[1] == 1 and table[:5] == genocchi_table(4)
    with pytest.raises(ValueError):
        genocchi(0)


def test_genocchi_is_prefix_consistent():
    long = genocchi_table(30)
    assert all(v > 0 for v in long[1:])
    assert long[:12] == genocchi_table(11)


@pytest.mark.parametrize("n", range(0, 7))
def test_totals(n):
    g = genocchi(n + 1)
    assert count_avoiders(F1, None, n) == count_avoiders(F2, None, n) == g
    assert len(generate(DL1, n)) == len(generate(DL2, n)) == g


def test_count_examples():
    assert count_avoiders(F1, "213", 3) == 2
    assert count_avoiders(F2, "231", 4) == 8
    assert count_avoiders(F1, "4213", 4) == 25


@pytest.mark.parametrize("n", range(0, 5))
def test_count_matches_filter(n, oracles):
    for pats in ("123", "2413,3142", "1342"):
        from dumont.perm import parse_pattern_set

        t = parse_pattern_set(pats)
        brute = [p for p in generate(F1, n) if not any(oracles.contains(p, x) for x in t)]
        assert count_avoiders(F1, t, n) == len(brute)
        assert [tuple(p) for p in generate(F1, n, t)] == [tuple(p) for p in brute]


def test_parallel_count_matches():
    for kind in (F1, F2):
        assert count_avoiders(kind, "2413", 5, workers=3) == count_avoiders(kind, "2413", 5)


def test_cap(monkeypatch):
    with pytest.raises(LimitExceeded):
        generate(F1, 9)
    monkeypatch.setenv("DUMONT_MAX_N", "3")
    with pytest.raises(LimitExceeded):
        count_avoiders(F1, None, 4)
    assert count_avoiders(F1, None, 3) == 17


def test_extend_to_odd():
    assert extend_to_odd(P("21")) == P("213")
    assert extend_to_odd(P("")) == P("1")
    assert extend_to_odd(P("2143")) == P("21435")
    with pytest.raises(OddInput):
        extend_to_odd(P("213"))


patterns_up_to_4 = st.integers(1, 4).flatmap(lambda k: st.permutations(range(1, k + 1))).map(tuple)


@settings(max_examples=25, deadline=None)
@given(st.sets(patterns_up_to_4, min_size=1, max_size=3), st.integers(0, 5))
def test_like_kinds_transport(t, n):
    dl1 = sum(1 for p in generate(DL1, n) if avoids_all(p, t))
    assert dl1 == count_avoiders(F1, map_pattern_set(t, Symmetry.COMPLEMENT), n)
    assert count_avoiders(DL1, t, n) == dl1
    dl2 = sum(1 for p in generate(DL2, n) if avoids_all(p, t))
    assert dl2 == count_avoiders(F2, map_pattern_set(t, Symmetry.REVERSE_COMPLEMENT), n)
