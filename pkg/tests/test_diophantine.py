import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specshrink.diophantine import (
    all_solutions,
    covers,
    decide_all_shrink_preserving,
    decide_preserve,
    decide_shrink,
    eigenvalue_selection_exists,
    find_covering_family,
    forced_indices,
    frobenius_number,
    representable_table,
)


def brute_solutions(ks, m):
    ranges = [range(m // k + 1) for k in ks]
    return sorted(x for x in itertools.product(*ranges) if sum(k * v for k, v in zip(ks, x)) == m)


def brute_has_cover(ks, ms):
    sets = [brute_solutions(ks, m) for m in ms]
    for fam in itertools.product(*sets):
        if all(any(x[i] for x in fam) for i in range(len(ks))):
            return True
    return False


def test_all_solutions_examples():
    assert all_solutions((2,), 6).solutions == ((3,),)
    assert set(all_solutions((1, 2), 3).solutions) == {(1, 1), (3, 0)}
    assert all_solutions((2, 3), 1).solutions == ()


ks_strategy = st.lists(st.integers(1, 6), min_size=1, max_size=4)


@settings(max_examples=200, deadline=None)
@given(ks_strategy, st.integers(0, 30))
def test_all_solutions_matches_nested_loops(ks, m):
    assert list(all_solutions(ks, m).solutions) == brute_solutions(ks, m)


@settings(max_examples=50, deadline=None)
@given(ks_strategy)
def test_decide_shrink_single_target_matches_dp(ks):
    table = representable_table(ks, 50)
    for m in range(1, 51):
        assert (decide_shrink(ks, [m]).verdict == "yes") == table[m]


def test_decide_shrink_examples():
    d = decide_shrink((2,), (4, 6))
    assert d.verdict == "yes" and d.witness == ((2,), (3,))
    assert decide_shrink((1, 2), (3,)).verdict == "yes"
    assert decide_shrink((2, 3), (1,)).verdict == "no"


def test_decide_preserve_examples():
    d = decide_preserve((1, 2), (3,))
    assert d.verdict == "yes" and d.witness == ((1, 1),)
    d = decide_preserve((2,), (4,))
    assert d.verdict == "yes" and d.witness == ((2,),)
    assert decide_shrink((1, 3), (2,)).witness == ((2, 0),)
    assert decide_preserve((1, 3), (2,)).verdict == "no"


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.lists(st.integers(1, 10), min_size=1, max_size=3))
def test_decide_preserve_matches_exhaustive(ks, ms):
    d = decide_preserve(ks, ms)
    s = decide_shrink(ks, ms)
    if d.verdict == "yes":
        assert s.verdict == "yes"
        assert covers(d.witness, len(ks)) == set(range(len(ks)))
        for x, m in zip(d.witness, ms):
            assert sum(k * v for k, v in zip(ks, x)) == m
    assert (d.verdict == "yes") == brute_has_cover(ks, ms)


def test_exact_search_beyond_greedy():
    # greedy takes (2,1,0) for m=4 and then cannot reach index 2; the cover is (0,0,1), (1,1,0)
    ks, ms = (1, 2, 4), (4, 3)
    fam = find_covering_family(ks, ms)
    assert fam is not None and covers(fam, 3) == {0, 1, 2}
    assert fam == ((0, 0, 1), (1, 1, 0))
    assert not brute_has_cover(ks, (4, 2))
    assert find_covering_family(ks, (4, 2)) is None


def test_all_preserving_examples():
    d = decide_all_shrink_preserving((1, 2), (3,), True)
    assert d.verdict == "no" and d.witness == ((3, 0),) and d.missed_index == 1
    assert decide_all_shrink_preserving((2,), (2,), True).verdict == "yes"
    d = decide_all_shrink_preserving((2, 3), (2, 3), False)
    assert d.verdict == "undetermined"
    assert "open question" in d.note
    assert decide_all_shrink_preserving((2, 3), (2, 3), True).verdict == "yes"
    assert decide_all_shrink_preserving((2,), (3,), False).verdict == "yes"  # vacuous


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.lists(st.integers(1, 10), min_size=1, max_size=3))
def test_all_preserving_no_reports_missed_index(ks, ms):
    d = decide_all_shrink_preserving(ks, ms, True)
    sets = [brute_solutions(ks, m) for m in ms]
    if d.verdict == "no":
        i = d.missed_index
        assert all(x[i] == 0 for x in d.witness)
        assert i not in covers(d.witness, len(ks))
    elif all(sets):
        # condition C: every family covers every index
        for fam in itertools.product(*sets):
            assert covers(fam, len(ks)) == set(range(len(ks)))
    assert forced_indices(ks, ms) <= set(range(len(ks)))


def test_frobenius_examples():
    assert frobenius_number((2, 3)) == 1
    assert frobenius_number((3, 5)) == 7
    assert frobenius_number((3, 4)) == 5


@pytest.mark.parametrize("ks", [(1, 3), (2, 4), (5,)])
def test_frobenius_rejects(ks):
    with pytest.raises(ValueError):
        frobenius_number(ks)


def test_frobenius_pairs_closed_form():
    for a in range(2, 21):
        for b in range(a + 1, 21):
            if gcd(a, b) == 1:
                assert frobenius_number((a, b)) == a * b - a - b


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(2, 12), min_size=2, max_size=4))
def test_frobenius_dp_consistent(ks):
    from functools import reduce

    if reduce(gcd, ks) != 1:
        return
    g = frobenius_number(ks)
    assert not all_solutions(ks, g).exists
    for m in range(g + 1, g + min(ks) + 1):
        assert all_solutions(ks, m).exists


@settings(max_examples=100, deadline=None)
@given(ks_strategy)
def test_eigenvalue_selection(ks):
    assert eigenvalue_selection_exists(ks) == (1 in ks) == (decide_shrink(ks, [1]).verdict == "yes")


def test_bad_input():
    with pytest.raises(ValueError):
        all_solutions((0, 2), 3)
    with pytest.raises(ValueError):
        decide_shrink((), (1,))
