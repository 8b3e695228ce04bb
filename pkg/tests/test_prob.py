"""Sampling and dependency-graph machinery, checked against literal
recounts on small sets.
"""

import math
import warnings

import pytest

from oracles import brute_s_restricted, subsets_of
from sidon.core import count_sidon_tuples, is_sidon, iter_sidon_tuples, vertex_stats
from sidon.params import ProblemParams
from sidon.prob import (
    JansonInput,
    check_w,
    dependency_degree,
    heavy_vertices,
    janson_bound,
    sample_w,
    sampling_hypothesis,
)


# ---------------------------------------------------------------------------
# sampling

def test_sample_w_deterministic_and_subset():
    params = ProblemParams(65536)
    i = tuple(range(1, 65))
    w1 = sample_w(i, params, 42)
    w2 = sample_w(i, params, 42)
    assert w1 == w2
    assert set(w1) <= set(i)
    assert sample_w((), params, 0) == ()


def test_sample_w_rejects_probability_above_one():
    with pytest.raises(ValueError):
        sample_w((1, 2, 3), ProblemParams(8), 0)  # p = 2/sqrt(3) > 1


def test_sample_w_per_element_frequency():
    # deterministic seed stream; each inclusion frequency should sit
    # within 3 standard errors of p
    params = ProblemParams(65536)
    i = tuple(range(1, 65))
    p = params.w_probability
    trials = 10_000
    hits = {u: 0 for u in i}
    for seed in range(trials):
        for u in sample_w(i, params, seed):
            hits[u] += 1
    se = math.sqrt(p * (1 - p) / trials)
    for u in i:
        assert abs(hits[u] / trials - p) <= 3 * se, u


# ---------------------------------------------------------------------------
# check_w

def test_check_w_frozen_four_example():
    params = ProblemParams(4)
    rep = check_w((1, 2, 3, 4), (1, 2, 3, 4), params)
    assert rep.max_s_uv == 3
    assert rep.witness == (1, 2)
    assert rep.s_of_w == (1, 2, 3, 4)   # every s_{I,W}(v) beats 2/16
    assert rep.size_ok and rep.heavy_ok
    assert not rep.multiplicity_ok      # 3 > 8*sqrt(4)/lg^4(4) = 1
    assert not rep.all_ok
    assert rep.failed_conditions() == ("multiplicity",)


def test_check_w_empty_w():
    params = ProblemParams(16)
    rep = check_w((1, 2, 3, 4), (), params)
    assert rep.max_s_uv == 0
    assert rep.witness is None
    assert rep.s_of_w == ()
    assert not rep.size_ok
    assert rep.multiplicity_ok and rep.heavy_ok


def test_check_w_sidon_w_is_quiet():
    params = ProblemParams(16)
    rep = check_w((1, 2, 5, 11), (1, 2, 5, 11), params)
    # a Sidon W still yields literal pairs (x, y) = (v, u); only the
    # restricted counts all vanish
    assert rep.s_of_w == ()
    assert rep.heavy_ok


def test_check_w_requires_subset():
    with pytest.raises(ValueError):
        check_w((1, 2, 3), (4,), ProblemParams(16))


def brute_max_s_uv(i, w):
    best, witness = 0, None
    wset = set(w)
    for u in i:
        for v in i:
            if u == v:
                continue
            s = sum(1 for x in w if x - (v - u) in wset)
            if s > best:
                best, witness = s, (u, v)
    return best, witness


def test_check_w_matches_brute_force():
    params = ProblemParams(6)
    for i in subsets_of(range(1, 7)):
        if not i:
            continue
        for w in subsets_of(i):
            rep = check_w(i, w, params)
            best, witness = brute_max_s_uv(i, w)
            assert rep.max_s_uv == best
            assert rep.witness == witness
            expected_s = tuple(v for v in i
                               if brute_s_restricted(i, w, v) > params.g_low)
            assert rep.s_of_w == expected_s


# ---------------------------------------------------------------------------
# heavy vertices

def test_heavy_vertices_examples():
    assert heavy_vertices((1, 2, 3, 4), 13) == (2, 3)
    assert heavy_vertices((1, 2, 5, 11), 1) == ()
    assert heavy_vertices((1, 2, 3, 4), 0) == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        heavy_vertices((1, 2), -1)


def test_sampling_hypothesis_recount():
    params = ProblemParams(256)
    for i in ((1, 2, 3), tuple(range(1, 25)), ()):
        hyp = sampling_hypothesis(i, params)
        i_h = heavy_vertices(i, params.g_low)
        assert hyp.size_ok == (len(i) >= params.size_big)
        assert hyp.heavy_count_ok == (len(i_h) > params.size_small)
        assert hyp.holds == (hyp.size_ok and hyp.heavy_count_ok)


# ---------------------------------------------------------------------------
# Janson bound

def test_janson_frozen_value():
    assert janson_bound(JansonInput(10, 5, 3, 100)) == pytest.approx(
        math.exp(-1 / 6))
    assert janson_bound(JansonInput(10, 0, 3, 100)) == 1.0


def test_janson_empty_family_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert janson_bound(JansonInput(0, 5, 1, 0)) == 1.0
    assert len(caught) == 1


def test_janson_monotonicity():
    base = JansonInput(10, 4, 3, 50)
    b = janson_bound(base)
    assert janson_bound(JansonInput(10, 5, 3, 50)) <= b
    assert janson_bound(JansonInput(10, 4, 4, 50)) >= b
    assert janson_bound(JansonInput(10, 4, 3, 80)) >= b


def test_janson_input_validation():
    with pytest.raises(ValueError):
        JansonInput(-1, 0, 1, 0)
    with pytest.raises(ValueError):
        JansonInput(0, -1, 1, 0)
    with pytest.raises(ValueError):
        JansonInput(0, 0, 0.5, 0)
    with pytest.raises(ValueError):
        JansonInput(0, 0, 1, -2)


# ---------------------------------------------------------------------------
# dependency graphs

def test_tuple_overlap_frozen_example():
    assert dependency_degree((1, 4, 7), "tuple_overlap", u=1, v=4) == 2


def test_tuple_overlap_bounded_by_three_exhaustive():
    for i in subsets_of(range(1, 11)):
        if len(i) < 2:
            continue
        for u in i:
            for v in i:
                if u != v:
                    assert dependency_degree(
                        i, "tuple_overlap", u=u, v=v) <= 3


def brute_middle_overlap(i):
    tuples = list(iter_sidon_tuples(i))
    if not tuples:
        return 1
    best = 0
    for r1 in tuples:
        m1 = {r1[1], r1[2]}
        deg = sum(1 for r2 in tuples
                  if r2 != r1 and (r2[1] in m1 or r2[2] in m1))
        best = max(best, deg)
    return best + 1


def test_middle_overlap_matches_brute_force():
    for i in subsets_of(range(1, 9)):
        got = dependency_degree(i, "middle_overlap")
        assert got == brute_middle_overlap(i)
        stats = vertex_stats(i)
        cap = 2 * max((stats.get(v) for v in i), default=0) + 1
        assert got <= cap


def test_middle_overlap_frozen_examples():
    assert dependency_degree((1, 2, 5, 11), "middle_overlap") == 1
    assert dependency_degree((1, 2, 3, 4), "middle_overlap") == 16


def test_dependency_degree_bad_mode():
    with pytest.raises(ValueError):
        dependency_degree((1, 2), "overlap")
    with pytest.raises(ValueError):
        dependency_degree((1, 2), "tuple_overlap")
    with pytest.raises(ValueError):
        dependency_degree((1, 2), "tuple_overlap", u=2, v=2)


def test_tuple_count_identities():
    # |R| is the full ordered tuple count; each tuple lands in exactly
    # two of the end-slot restricted sets, and for degenerate-free I the
    # count is also a quarter of the vertex-stat sum
    for i in subsets_of(range(1, 9)):
        count = count_sidon_tuples(i)
        total_restricted = sum(brute_s_restricted(i, i, v) for v in i)
        assert 2 * count == total_restricted
        if any(len(set(t)) == 3 for t in iter_sidon_tuples(i)):
            continue
        stats = vertex_stats(i)
        assert 4 * count == sum(stats.get(v) for v in i)
