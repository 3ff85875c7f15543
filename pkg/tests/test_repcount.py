import random

import pytest

from multrep import (
    AllNaturals,
    FactorizationLimitError,
    MultiplicativeSystem,
    PrimesWithOne,
    Singleton,
    Squarefree,
    Union,
    build,
    count_additive_reps,
    count_basis_reps,
    count_system_reps,
    omega,
    window_stats,
)

from conftest import naive_divisors, oracle_count_reps, sieve_squarefree


def test_fundamental_system_count_is_one():
    system = build("fundamental", 2).system
    assert count_system_reps(system, 360).count == 1


def test_one_t_example_tuples():
    system = MultiplicativeSystem((AllNaturals(), Singleton((1, 2))))
    w = count_system_reps(system, 12)
    assert w.count == 2
    assert set(w.tuples) == {(12, 1), (6, 2)}


def test_s_inf_prime_example():
    system = MultiplicativeSystem(
        (AllNaturals(), PrimesWithOne(), Singleton((1,)))
    )
    w = count_system_reps(system, 7)
    assert w.count == 2
    assert set(w.tuples) == {(7, 1, 1), (1, 7, 1)}


def test_basis_counts():
    assert count_basis_reps(AllNaturals(), 2, 6).count == 4  # d(6)
    w = count_basis_reps(AllNaturals(), 2, 1)
    assert w.count == 1 and w.tuples == ((1, 1),)
    # 8 = 2*4 = 8*1, neither split has both factors squarefree
    assert count_basis_reps(Squarefree(), 2, 8).count == 0


def test_divisor_identity():
    for n in range(1, 2000):
        assert count_basis_reps(AllNaturals(), 2, n, tuple_cap=0).count == len(
            naive_divisors(n)
        )


def test_squarefree_power_law_small():
    for n in sieve_squarefree(500):
        for h in (2, 3):
            assert (
                count_basis_reps(AllNaturals(), h, n, tuple_cap=0).count
                == h ** omega(n)
            )


def test_oracle_equivalence_random():
    rng = random.Random(1)
    systems = [
        build("fundamental", 2).system,
        build("one-t", 2, t=2).system,
        build("s-inf", 3, s=2).system,
        MultiplicativeSystem((Squarefree(), AllNaturals())),
        MultiplicativeSystem((Singleton((1, 2, 3, 6)), AllNaturals(), PrimesWithOne())),
    ]
    for _ in range(60):
        system = rng.choice(systems)
        n = rng.randrange(1, 2000)
        assert count_system_reps(system, n, tuple_cap=0).count == oracle_count_reps(
            system, n
        )


def test_prime_cap():
    # any system whose parts all contain 1 represents a prime at most h ways
    for h in (2, 3):
        system = build("s-inf", h, s=h).system
        for p in (2, 3, 5, 7, 97):
            assert count_system_reps(system, p, tuple_cap=0).count <= h


def test_truncation_keeps_exact_count():
    w = count_basis_reps(AllNaturals(), 2, 720, tuple_cap=4)
    assert w.truncated
    assert len(w.tuples) == 4
    assert w.count == len(naive_divisors(720))


def test_min_l_t_law():
    for t in (1, 2, 5):
        system = build("one-t", 2, t=t).system
        for n in range(1, 512):
            ell = 1
            m = n
            while m % 2 == 0:
                m //= 2
                ell += 1
            assert count_system_reps(system, n, tuple_cap=0).count == min(ell, t)


def test_window_stats_examples():
    fundamental = build("fundamental", 2).system
    stats = window_stats(fundamental, 2, 1000)
    assert (stats.min_count, stats.max_count) == (1, 1)

    one_t = build("one-t", 2, t=3).system
    stats = window_stats(one_t, 2, 64)
    assert stats.min_count == 1 and stats.max_count == 3
    assert stats.argmin == 3 and stats.argmax == 4  # smallest-n tiebreak

    s_inf = build("s-inf", 3, s=2).system
    assert window_stats(s_inf, 2, 100).min_count == 2


def test_window_stats_record_field_names():
    stats = window_stats(build("fundamental", 2).system, 2, 10)
    assert list(stats.to_record()) == [
        "lo", "hi", "min_count", "argmin", "max_count", "argmax",
    ]


def test_additive_reps():
    n0 = Union((AllNaturals(), Singleton((0,))))
    assert count_additive_reps(n0, 2, 3) == 4  # (0,3),(1,2),(2,1),(3,0)
    evens = Singleton((2, 4))
    assert count_additive_reps(evens, 2, 5) == 0  # parity
    assert count_additive_reps(n0, 3, 0) == 1  # all-zero tuple


def test_additive_reps_brute_force():
    a = Singleton((0, 1, 3, 4))
    elems = [0, 1, 3, 4]
    for n in range(0, 15):
        brute = sum(
            1
            for x in elems
            for y in elems
            for z in elems
            if x + y + z == n
        )
        assert count_additive_reps(a, 3, n) == brute


def test_input_validation():
    system = build("fundamental", 2).system
    with pytest.raises(ValueError):
        count_system_reps(system, 0)
    with pytest.raises(FactorizationLimitError):
        count_system_reps(system, 2**63)
    with pytest.raises(ValueError):
        window_stats(system, 1, 10)
