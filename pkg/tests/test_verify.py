from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from subsetsum.construct import ConstructionTrace, build_a1, build_a_thm11, build_a_thm13
from subsetsum.errors import InvalidInput
from subsetsum.sequences import BSpec
from subsetsum.verify import (
    EQUAL,
    MISMATCH,
    PENDING_ONLY,
    SKIPPED,
    WindowBeyondSupport,
    check_lemma21,
    last_verified_stage,
    verify_complement,
    verify_trace,
)

from .oracles import enum_sums


def test_verify_trace_examples():
    assert all(r.verified for r in verify_trace(build_a_thm11(11, 5)))
    reps = verify_trace(build_a_thm13(4, 6, 4))
    assert [r.k for r in reps] == [2, 3, 4]
    assert all(r.verified for r in reps)
    assert reps[-1].span == 98


def test_verify_trace_detects_tampering():
    trace = build_a_thm11(11, 4)
    s3, s4 = trace.steps
    bad = replace(s4, elements=tuple(a for a in s4.elements if a != 138))
    reps = verify_trace(ConstructionTrace(trace.bspec, (s3, bad)))
    assert reps[0].status == EQUAL
    assert reps[1].status == MISMATCH
    m = reps[1].match
    # independent recount of the damage
    truth = enum_sums(bad.elements)
    expect = set(range(617)) - set(s4.expected.holes)
    assert set(m.undeclared_missing) == expect - truth
    assert set(m.declared_holes_present) == truth & set(s4.expected.holes)
    d = reps[1].to_dict()
    assert d["verified"] is False and d["mismatches"]


def test_verify_trace_budget_skips():
    reps = verify_trace(build_a_thm11(11, 6), budget=3000)
    assert [r.status for r in reps] == [EQUAL, EQUAL, EQUAL, SKIPPED]
    assert "budget" in reps[-1].notice
    assert last_verified_stage(reps) == 5


def test_verify_complement_thm11_pending():
    a5 = build_a_thm11(11, 5).final.elements
    rep = verify_complement(a5, BSpec.thm11(11), 2464)
    assert rep.status == PENDING_ONLY
    assert rep.pending == (2348, 2426, 2453)
    assert rep.stage == 5
    assert rep.exact_upto == 1964 + 2 * 116 - 1
    assert rep.exact_below_cutoff
    assert verify_complement(a5, BSpec.thm11(11), 2000).equal


def test_verify_complement_ap_and_explicit():
    rep = verify_complement([1, 2, 5, 6, 12, 24, 48], BSpec.ap(4, 6), 98)
    assert rep.equal and rep.stage == 4 and rep.exact_upto == 48
    assert verify_complement([1, 2], BSpec.explicit([4]), 3).equal


def test_verify_complement_reports_errors():
    rep = verify_complement([1, 2, 4], BSpec.explicit([4]), 7)
    assert rep.status == MISMATCH
    assert rep.b_represented == (4,)
    assert rep.first_disagreement == 4
    rep = verify_complement([1, 3, 5], BSpec.explicit([4]), 9)
    assert rep.missing == (2, 7)


def test_verify_complement_window_guard():
    with pytest.raises(WindowBeyondSupport):
        verify_complement([1, 2], BSpec.explicit([4]), 4)
    with pytest.raises(InvalidInput):
        verify_complement([2, 1], BSpec.explicit([4]), 2)


@given(st.integers(0, 2464))
def test_window_monotone_thm11(m):
    a5 = build_a_thm11(11, 5).final.elements
    full = verify_complement(a5, BSpec.thm11(11), 2195)
    assert full.equal
    if m <= 2195:
        assert verify_complement(a5, BSpec.thm11(11), m).equal


@given(st.sampled_from([4, 7, 8, 11, 12, 20]), st.data())
def test_window_monotone_ap(b1, data):
    d = data.draw(st.integers(b1 + 2, 2 * b1 + 1))
    el = build_a_thm13(b1, d, 5).final.elements
    top = sum(el)
    assert verify_complement(el, BSpec.ap(b1, d), top).equal
    m = data.draw(st.integers(0, top))
    assert verify_complement(el, BSpec.ap(b1, d), m).equal


def test_lemma21_examples():
    rep = check_lemma21([1, 2, 3, 4], 11, 38)
    assert rep.forced_next == 12
    assert rep.range_after == (13, 23)
    assert rep.interval_with_one_hole
    assert set(rep.admissible_after) <= set(range(13, 24))
    assert rep.holds
    rep = check_lemma21([1, 2], 4, 14)
    assert rep.forced_next == 5
    assert rep.range_after == (6, 9)
    # b2 = 3b1 + 2: every candidate in range would represent 14
    assert rep.admissible_after == ()
    assert rep.holds
    with pytest.raises(InvalidInput):
        check_lemma21([1, 2, 3, 4], 11, 23)
    with pytest.raises(InvalidInput):
        check_lemma21([1, 2, 4], 11, 38)


def test_lemma21_brute_force_candidates():
    # candidates for the element after A_1, checked by enumeration
    a1, b1, b2 = [1, 2, 3, 4], 11, 38
    ok = []
    for a in range(5, 40):
        sums = enum_sums(a1 + [a])
        if b1 in sums or b2 in sums:
            continue
        if b1 + 1 not in sums and a > b1 + 1:
            continue
        ok.append(a)
    assert ok == [12]


@pytest.mark.parametrize("b1", [4, 7, 8] + list(range(11, 61)))
def test_lemma21_property(b1):
    a1 = build_a1(b1)
    for b2 in (2 * b1 + 2, 3 * b1 + 2, 3 * b1 + 3, 3 * b1 + 5, 5 * b1):
        assert check_lemma21(a1, b1, b2).holds
