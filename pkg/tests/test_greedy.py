"""Tests for the generators, the exact threshold arithmetic, and the scan."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bhgreedy import (
    Params,
    ScanExceededConfiguredLimit,
    SumTableSet,
    Threshold,
    classic_greedy,
    int_nth_root,
    is_strong_candidate,
    strong_greedy,
    theorem_bound,
    threshold_leq,
)
from bhgreedy.greedy import _accept_g1, _accept_general
from oracles import (
    is_strong,
    naive_classic_greedy,
    naive_classic_greedy_slow,
    naive_strong_greedy,
    naive_strong_greedy_slow,
)

MIAN_CHOWLA_10 = [1, 2, 4, 8, 13, 21, 31, 45, 66, 81]


def build(h, elements):
    t = SumTableSet(h)
    for a in elements:
        t.add_element(a)
    return t


# ---------------------------------------------------------------------------
# exact integer arithmetic


def test_int_nth_root_edges():
    assert int_nth_root(0, 3) == 0
    assert int_nth_root(1, 7) == 1
    assert int_nth_root(26, 1) == 26
    assert int_nth_root(27, 3) == 3
    assert int_nth_root(26, 3) == 2
    with pytest.raises(ValueError):
        int_nth_root(-1, 2)
    with pytest.raises(ValueError):
        int_nth_root(4, 0)


@given(x=st.integers(0, 10**36), k=st.integers(1, 8))
@settings(max_examples=200)
def test_int_nth_root_is_exact_floor(x, k):
    r = int_nth_root(x, k)
    assert r ** k <= x < (r + 1) ** k


def test_threshold_leq_examples():
    # integer exponent, boundary inclusive
    assert threshold_leq(100, 10, 2, 1, 1)
    assert not threshold_leq(101, 10, 2, 1, 1)
    # fractional exponent 3/2: 4^2 = 16 <= 27 = 3^3, 6^2 = 36 > 27
    assert threshold_leq(4, 3, 2, 2, 2)
    assert not threshold_leq(6, 3, 2, 2, 2)


def test_threshold_leq_rejects_bad_level():
    with pytest.raises(ValueError):
        threshold_leq(1, 2, 2, 1, 2)


@given(n=st.integers(1, 50), h=st.integers(2, 5), g=st.integers(1, 5),
       count=st.integers(0, 10**6))
@settings(max_examples=200)
def test_threshold_routes_agree(n, h, g, count):
    for s in range(1, g + 1):
        th = Threshold.for_level(n, h, g, s)
        assert th.e_num >= h + g - 1 >= 2
        assert th.admits(count) == threshold_leq(count, n, h, g, s)
        # deciding via the integer floor of the ceiling is equivalent
        assert th.admits(count) == (count <= th.floor)


def test_theorem_bound_examples():
    assert theorem_bound(10, 2, 1).floor == 2000
    assert theorem_bound(1, 3, 2).floor == 4
    assert theorem_bound(1, 2, 7).floor == 14
    assert theorem_bound(4, 2, 2).floor == 128  # 4 * 4^(5/2)


@given(n=st.integers(1, 40), h=st.integers(2, 4), g=st.integers(1, 4))
@settings(max_examples=100)
def test_theorem_bound_floor_is_boundary(n, h, g):
    b = theorem_bound(n, h, g)
    assert b.admits(b.floor)
    assert not b.admits(b.floor + 1)


# ---------------------------------------------------------------------------
# candidate verdicts


def test_is_strong_candidate_examples():
    t = build(2, [1])
    assert is_strong_candidate(t, t.candidate_delta(2), 2, 2, 1).accepted

    t = build(2, [1, 2])
    verdict = is_strong_candidate(t, t.candidate_delta(3), 3, 2, 1)
    assert not verdict.accepted
    assert verdict.reason == "bhg"
    assert verdict.x == 4  # 1+3 = 2+2

    assert is_strong_candidate(t, t.candidate_delta(4), 3, 2, 1).accepted


def test_is_strong_candidate_level_rejection_names_level():
    # At step 20 of the (h=3, g=3) run, 770 keeps the set B_3[3] but lifts
    # R_3 past the level ceiling, so the strong rule skips it (the classic
    # greedy takes it; the two sequences first diverge here).
    prefix = strong_greedy(Params(3, 3, 19)).terms
    t = build(3, prefix)
    verdict = is_strong_candidate(t, t.candidate_delta(770), 20, 3, 3)
    assert not verdict.accepted
    assert verdict.reason == "level"
    assert verdict.s == 3
    from oracles import is_bhg
    assert is_bhg(prefix + [770], 3, 3)
    assert not is_strong(prefix + [770], 3, 3)
    assert strong_greedy(Params(3, 3, 20)).terms[19] == 806
    assert classic_greedy(Params(3, 3, 20)).terms[19] == 770


@pytest.mark.parametrize("h,g", [(2, 1), (2, 2), (3, 2), (3, 3)])
def test_verdicts_match_from_scratch_oracle(h, g):
    rec = strong_greedy(Params(h, g, 8))
    for n in range(2, len(rec.terms)):
        prefix = rec.terms[:n]
        t = build(h, prefix)
        profile = t.rep_histogram(g)
        for m in range(1, 3 * max(prefix) + 4):
            if m in t:
                continue
            verdict = is_strong_candidate(t, t.candidate_delta(m), n + 1, h, g, profile)
            assert verdict.accepted == is_strong(prefix + [m], h, g), (n, m)


@pytest.mark.parametrize("h,g", [(2, 1), (2, 3), (3, 1), (3, 2)])
def test_fused_scan_paths_match_contract_op(h, g):
    rec = strong_greedy(Params(h, g, 7))
    for n in range(1, len(rec.terms)):
        prefix = rec.terms[:n]
        t = build(h, prefix)
        profile = t.rep_histogram(g)
        fused = _accept_g1(t) if g == 1 else _accept_general(t, g, n + 1, True)
        for m in range(1, 2 * max(prefix) + 10):
            if m in t:
                continue
            expect = is_strong_candidate(t, t.candidate_delta(m), n + 1, h, g, profile)
            assert fused(m) == expect.accepted, (n, m)


# ---------------------------------------------------------------------------
# generators against frozen values and the naive oracles


def test_strong_first_two_terms_are_one_and_two():
    for h in (2, 3, 4):
        for g in (1, 2):
            assert strong_greedy(Params(h, g, 2)).terms == [1, 2]


def test_strong_2_1_matches_mian_chowla():
    assert strong_greedy(Params(2, 1, 10)).terms == MIAN_CHOWLA_10


def test_classic_2_1_matches_mian_chowla():
    assert classic_greedy(Params(2, 1, 10)).terms == MIAN_CHOWLA_10


def test_classic_3_1_first_terms():
    # {1,2,3} and {1,2,4} both collide at order 3 (1+1+3 = 1+2+2 and
    # 1+1+4 = 2+2+2), so the third term is 5.
    assert classic_greedy(Params(3, 1, 3)).terms == [1, 2, 5]
    assert classic_greedy(Params(3, 1, 5)).terms == [1, 2, 5, 14, 33]


def test_strong_3_2_frozen_prefix():
    assert strong_greedy(Params(3, 2, 8)).terms == [1, 2, 3, 6, 12, 18, 41, 54]


@pytest.mark.parametrize("h,g", [
    (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3),
])
def test_strong_agrees_with_naive_oracle(h, g):
    assert strong_greedy(Params(h, g, 20)).terms == naive_strong_greedy(h, g, 20)


@pytest.mark.parametrize("h,g", [
    (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3),
])
def test_classic_agrees_with_naive_oracle(h, g):
    assert classic_greedy(Params(h, g, 20)).terms == naive_classic_greedy(h, g, 20)


@pytest.mark.parametrize("h,g,n", [(2, 2, 8), (3, 2, 6)])
def test_generators_agree_with_slowest_oracles(h, g, n):
    assert strong_greedy(Params(h, g, n)).terms == naive_strong_greedy_slow(h, g, n)
    assert classic_greedy(Params(h, g, n)).terms == naive_classic_greedy_slow(h, g, n)


def test_g1_collapse_h2_and_h3():
    assert strong_greedy(Params(2, 1, 30)).terms == classic_greedy(Params(2, 1, 30)).terms
    assert strong_greedy(Params(3, 1, 12)).terms == classic_greedy(Params(3, 1, 12)).terms


def test_g1_literal_scan_matches_resumed_scan():
    for h, n in ((2, 15), (3, 8)):
        literal = strong_greedy(Params(h, 1, n), literal_scan=True)
        fast = strong_greedy(Params(h, 1, n))
        assert literal.terms == fast.terms


# ---------------------------------------------------------------------------
# record contents and scan behaviour


def test_record_fields_and_invariants():
    rec = strong_greedy(Params(2, 2, 12))
    assert rec.algorithm == "strong"
    assert rec.terms[0] == 1
    assert len(set(rec.terms)) == len(rec.terms)
    assert len(rec.per_step) == 12
    for meta, term in zip(rec.per_step, rec.terms):
        assert meta.term == term
        assert term <= meta.bound_floor
        assert 0 <= meta.scan_length <= meta.bound_floor
    assert rec.is_sorted in (True, False)


def test_classic_output_strictly_increasing():
    rec = classic_greedy(Params(2, 3, 15))
    assert rec.is_sorted


def test_determinism():
    a = strong_greedy(Params(3, 2, 10))
    b = strong_greedy(Params(3, 2, 10))
    assert a.terms == b.terms
    assert [(m.n, m.term, m.scan_length, m.bound_floor) for m in a.per_step] == \
           [(m.n, m.term, m.scan_length, m.bound_floor) for m in b.per_step]


@pytest.mark.parametrize("algo", [strong_greedy, classic_greedy])
def test_parallel_scan_matches_sequential(algo):
    params = Params(2, 2, 18)
    seq = algo(params)
    par = algo(params, workers=3, chunk=7)
    assert par.terms == seq.terms
    assert [m.scan_length for m in par.per_step] == [m.scan_length for m in seq.per_step]


def test_classic_scan_cap_is_enforced():
    with pytest.raises(ScanExceededConfiguredLimit):
        classic_greedy(Params(2, 1, 10), scan_cap=3)


def test_exhausted_theorem_ceiling_aborts_loudly(monkeypatch):
    from bhgreedy import ScanExceededBound, TheoremBound

    monkeypatch.setattr(
        "bhgreedy.greedy.theorem_bound",
        lambda n, h, g: TheoremBound(n, h, g, rhs_pow=0, floor=0),
    )
    with pytest.raises(ScanExceededBound):
        strong_greedy(Params(2, 1, 5))


def test_param_validation():
    for bad in ((1, 1, 5), (2, 0, 5), (2, 1, 0)):
        with pytest.raises(ValueError):
            Params(*bad)


def test_on_step_observer_sees_every_commit():
    seen = []
    rec = strong_greedy(Params(2, 1, 6), on_step=seen.append)
    assert [m.term for m in seen] == rec.terms
