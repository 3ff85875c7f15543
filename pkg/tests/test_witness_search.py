from itertools import islice

import pytest

from multrep import (
    AllNaturals,
    SearchBudget,
    basis_system,
    build,
    candidate_stream,
    find_witness,
)

from conftest import naive_divisors


def test_exhaustive_stream():
    assert list(islice(candidate_stream("exhaustive", 100), 3)) == [2, 3, 4]


def test_squarefree_rich_stream_order():
    got = list(candidate_stream("squarefree-rich", 30))
    # groups by number of prime factors, ascending value within a group
    assert got == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
        6, 10, 14, 15, 21, 22, 26,
        30,
    ]


def test_streams_are_bounded_and_duplicate_free():
    for strategy in ("exhaustive", "squarefree-rich", "hybrid"):
        got = list(candidate_stream(strategy, 50))
        assert all(2 <= n <= 50 for n in got)
        assert len(got) == len(set(got))


def test_stream_determinism():
    for strategy in ("squarefree-rich", "hybrid"):
        a = list(candidate_stream(strategy, 200))
        b = list(candidate_stream(strategy, 200))
        assert a == b


def test_hybrid_covers_everything():
    assert sorted(candidate_stream("hybrid", 60)) == list(range(2, 61))


def test_find_witness_divisor_rich():
    system = basis_system(AllNaturals(), 2)
    budget = SearchBudget(max_candidates=10_000, max_n=10_000, strategy="exhaustive")
    outcome = find_witness(system, 12, budget)
    assert outcome.witness is not None
    n = outcome.witness.n
    assert outcome.witness.count == len(naive_divisors(n)) >= 12
    # exhaustive order: no smaller integer qualifies
    assert all(len(naive_divisors(m)) < 12 for m in range(2, n))


def test_find_witness_negative_honesty():
    system = build("fundamental", 2).system
    budget = SearchBudget(max_candidates=2000, max_n=5000, strategy="hybrid")
    outcome = find_witness(system, 2, budget)
    assert outcome.witness is None
    assert outcome.max_count_seen == 1
    assert outcome.candidates_tried == 2000


def test_find_witness_s_inf_target():
    system = build("s-inf", 2, s=2).system
    budget = SearchBudget(max_candidates=2000, max_n=2000, strategy="squarefree-rich")
    outcome = find_witness(system, 5, budget)
    assert outcome.witness is not None
    assert outcome.witness.count >= 5
    assert outcome.witness.n == 210  # the first 4-prime product in the stream


def test_monotone_escalation():
    system = basis_system(AllNaturals(), 2)
    prev = 0
    for max_n in (100, 1000, 5000):
        budget = SearchBudget(max_candidates=max_n, max_n=max_n, strategy="exhaustive")
        outcome = find_witness(system, 10**9, budget)
        assert outcome.max_count_seen >= prev
        prev = outcome.max_count_seen


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_candidates=0)
    with pytest.raises(ValueError):
        SearchBudget(strategy="magic")
