"""Tests for rank sequences and maximal-rank enumeration."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import path_example, running_example

from gentle_si import oracle
from gentle_si.errors import InputError
from gentle_si.quivers import Arrow, Coloring, Quiver
from gentle_si.ranks import (
    is_maximal_rank,
    is_rank_sequence,
    maximal_rank_sequences,
    rank_violations,
    restrict_to_color,
)


def test_running_full_rank_is_admissible():
    q, c, beta, r = running_example()
    assert is_rank_sequence(q, c, beta, r)


def test_running_overflow_at_vertex_four():
    q, c, beta, r = running_example()
    bad = dict(r, b2=3)
    assert not is_rank_sequence(q, c, beta, bad)
    assert rank_violations(q, c, beta, bad) == [("4", "b")]


def test_zero_ranks_always_admissible():
    q, c, beta, _ = running_example()
    zero = {a: 0 for a in q.arrow_names()}
    assert is_rank_sequence(q, c, beta, zero)


def test_missing_entries_raise():
    q, c, beta, r = running_example()
    partial = dict(r)
    del partial["c1"]
    with pytest.raises(InputError):
        is_rank_sequence(q, c, beta, partial)
    with pytest.raises(InputError):
        is_rank_sequence(q, c, {"1": 2}, r)


def test_restrict_to_color_b():
    q, c, beta, r = running_example()
    res = restrict_to_color(q, c, beta, r, "b")
    assert res.vertex_path == ("1", "2", "4", "5")
    assert res.beta_s == (2, 6, 4, 2)
    assert res.r_s == (2, 2, 2)


def test_restrict_to_color_c():
    q, c, beta, r = running_example()
    res = restrict_to_color(q, c, beta, r, "c")
    assert res.vertex_path == ("3", "4", "5")
    assert res.beta_s == (2, 4, 2)
    assert res.r_s == (2, 2)
    with pytest.raises(InputError):
        restrict_to_color(q, c, beta, r, "z")


def test_path_maximal_ranks_dimension_one():
    q, c, beta = path_example()
    got = maximal_rank_sequences(q, c, beta)
    assert got == [{"a1": 0, "a2": 1}, {"a1": 1, "a2": 0}]


def test_path_maximal_ranks_dimension_two_middle():
    q, c, _ = path_example()
    got = maximal_rank_sequences(q, c, {"1": 1, "2": 2, "3": 1})
    assert got == [{"a1": 1, "a2": 1}]


def test_running_maximal_ranks():
    q, c, beta, r = running_example()
    got = maximal_rank_sequences(q, c, beta)
    assert r in got
    variant = dict(r, b2=3, b3=1)
    assert variant in got
    for cand in got:
        assert is_rank_sequence(q, c, beta, cand)
    order = sorted(q.arrow_names())
    tuples = [tuple(cand[a] for a in order) for cand in got]
    for i, p in enumerate(tuples):
        for j, other in enumerate(tuples):
            if i != j:
                assert not all(x <= y for x, y in zip(p, other))
    assert got == oracle.maximal_rank_sequences_bruteforce(q, c, beta)


def test_maximal_ranks_no_arrows():
    q = Quiver(["1", "2"], [])
    c = Coloring({})
    assert maximal_rank_sequences(q, c, {"1": 3, "2": 1}) == [{}]


def test_maximal_ranks_zero_dimension_vertex():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    c = Coloring({"a": "s"})
    assert maximal_rank_sequences(q, c, {"1": 0, "2": 5}) == [{"a": 0}]


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_maximal_ranks_match_bruteforce(seed):
    rng = random.Random(seed)
    q, c = oracle.random_colored_quiver(rng, max_vertices=5)
    beta = {v: rng.randint(0, 3) for v in q.vertices}
    got = maximal_rank_sequences(q, c, beta)
    assert got == oracle.maximal_rank_sequences_bruteforce(q, c, beta)
    for cand in got:
        assert is_rank_sequence(q, c, beta, cand)


def test_is_maximal_rank_on_running_example():
    q, c, beta, r = running_example()
    assert is_maximal_rank(q, c, beta, r)
    assert not is_maximal_rank(q, c, beta, dict(r, b2=1))
    with pytest.raises(InputError):
        is_maximal_rank(q, c, beta, dict(r, b2=5))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_is_maximal_rank_matches_enumeration(seed):
    rng = random.Random(seed)
    q, c = oracle.random_colored_quiver(rng, max_vertices=4)
    beta = {v: rng.randint(0, 3) for v in q.vertices}
    maximal = maximal_rank_sequences(q, c, beta)
    for cand in maximal:
        assert is_maximal_rank(q, c, beta, cand)
        lowered = dict(cand)
        positive = [a for a in lowered if lowered[a] > 0]
        if positive:
            a = rng.choice(positive)
            lowered[a] -= 1
            assert is_maximal_rank(q, c, beta, lowered) == (lowered in maximal)
