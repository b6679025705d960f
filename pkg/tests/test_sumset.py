import random

import pytest
from hypothesis import given, strategies as st

from subsetsum.errors import InvalidInput, Overflow, ResourceLimit
from subsetsum.sumset import (
    HolePattern,
    SumSet,
    add_element,
    empty_sumset,
    holes_in_range,
    matches_pattern,
    mem_budget,
    subset_sums,
)

from .oracles import enum_sums, pattern_set


@pytest.mark.parametrize("cap", [10, 0, 616])
def test_empty_sumset_is_zero_only(cap):
    s = empty_sumset(cap)
    assert s.members() == [0]
    assert s.cap == cap


def test_empty_sumset_over_budget():
    with pytest.raises(ResourceLimit):
        empty_sumset(100, budget=50)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SUBSETSUM_MEM_BUDGET", "64")
    assert mem_budget() == 64
    with pytest.raises(ResourceLimit):
        empty_sumset(64)
    assert empty_sumset(63).cap == 63
    monkeypatch.setenv("SUBSETSUM_MEM_BUDGET", "lots")
    with pytest.raises(InvalidInput):
        mem_budget()


def test_add_element_examples():
    s = subset_sums([1, 2], 20)
    assert add_element(s, 5).members() == [0, 1, 2, 3, 5, 6, 7, 8]
    assert add_element(empty_sumset(20), 7).members() == [0, 7]
    got = add_element(subset_sums([1, 2, 3, 4], 30), 12)
    assert set(got) == enum_sums([1, 2, 3, 4, 12])
    assert got.members() == list(range(11)) + list(range(12, 23))


def test_add_element_truncates_and_rejects_nonpositive():
    s = add_element(subset_sums([1, 2], 4), 3)
    assert s.members() == [0, 1, 2, 3, 4]
    assert add_element(s, 100) == s
    with pytest.raises(InvalidInput):
        add_element(s, 0)
    with pytest.raises(Overflow):
        add_element(s, 1 << 64)


def test_subset_sums_examples():
    assert subset_sums([1, 2, 3, 4], 10).members() == list(range(11))
    s = subset_sums([1, 2, 5, 6, 12], 26)
    assert set(s) == pattern_set(26, [4, 10, 16, 22]) == enum_sums([1, 2, 5, 6, 12])
    assert subset_sums([], 5).members() == [0]


def test_subset_sums_rejects_duplicates():
    with pytest.raises(InvalidInput):
        subset_sums([3, 3], 10)


def test_matches_pattern():
    s = subset_sums([1, 2, 5, 6, 12], 26)
    assert matches_pattern(s, HolePattern(26, (4, 10, 16, 22))).equal
    small = subset_sums([1, 2], 3)
    assert matches_pattern(small, HolePattern(3)).equal
    rep = matches_pattern(small, HolePattern(3, (2,)))
    assert not rep
    assert rep.declared_holes_present == (2,)
    assert rep.undeclared_missing == ()
    rep = matches_pattern(subset_sums([1, 3], 4), HolePattern(4))
    assert rep.undeclared_missing == (2,)
    with pytest.raises(InvalidInput):
        matches_pattern(small, HolePattern(4))


def test_holes_in_range():
    assert holes_in_range(subset_sums([1, 2, 5, 6, 12], 26), 0, 26) == [4, 10, 16, 22]
    assert holes_in_range(empty_sumset(3), 0, 3) == [1, 2, 3]
    assert holes_in_range(subset_sums([1, 2, 3, 4], 10), 0, 10) == []
    assert holes_in_range(subset_sums([1, 2, 5, 6, 12], 26), 5, 16) == [10, 16]
    with pytest.raises(InvalidInput):
        holes_in_range(empty_sumset(3), 2, 4)


def test_hole_pattern_invariants():
    with pytest.raises(InvalidInput):
        HolePattern(10, (0,))
    with pytest.raises(InvalidInput):
        HolePattern(10, (3, 3))
    with pytest.raises(InvalidInput):
        HolePattern(10, (11,))
    assert HolePattern.from_holes(10, [5, 2, 5]).holes == (2, 5)


def test_sumset_rejects_bad_bits():
    with pytest.raises(InvalidInput):
        SumSet(4, 0b10)
    with pytest.raises(InvalidInput):
        SumSet(2, 0b1001)


def test_least_missing():
    s = subset_sums([1, 2, 5], 10)
    assert s.least_missing() == 4
    assert s.least_missing(5) == 9
    assert subset_sums([1, 2], 3).least_missing() is None


element_lists = st.lists(st.integers(1, 300), unique=True, max_size=10)


@given(element_lists, st.integers(1, 300))
def test_monotone(elements, a):
    s = subset_sums(elements, 1500)
    t = add_element(s, a)
    assert set(s) <= set(t)


@given(element_lists)
def test_zero_and_exact_span(elements):
    total = sum(elements)
    s = subset_sums(elements, total)
    assert 0 in s
    assert total in s
    assert s.max() == total


@given(element_lists, st.randoms())
def test_order_independent(elements, rnd):
    shuffled = list(elements)
    rnd.shuffle(shuffled)
    assert subset_sums(elements, 800) == subset_sums(shuffled, 800)


@given(st.lists(st.integers(1, 10_000), unique=True, max_size=12))
def test_matches_enumeration(elements):
    s = subset_sums(elements, sum(elements))
    assert set(s) == enum_sums(elements)


@given(element_lists, st.integers(0, 400))
def test_truncation_is_restriction(elements, cap):
    full = enum_sums(elements)
    assert set(subset_sums(elements, cap)) == {v for v in full if v <= cap}


def test_large_window_smoke():
    rnd = random.Random(7)
    elements = rnd.sample(range(1, 200_000), 40)
    s = subset_sums(elements, sum(elements))
    assert s.max() == sum(elements)
    assert len(holes_in_range(s, 0, s.cap)) == s.cap + 1 - len(s)


@given(st.integers(1, 3000), st.data())
def test_hole_pattern_bits_match_set(span, data):
    holes = data.draw(st.lists(st.integers(1, span), unique=True, max_size=20))
    p = HolePattern.from_holes(span, holes)
    bits = p.to_bits()
    assert {v for v in range(span + 1) if bits >> v & 1} == set(range(span + 1)) - set(holes)
