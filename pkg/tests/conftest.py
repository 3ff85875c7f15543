"""Shared brute-force oracles, kept independent of the library internals."""

from itertools import combinations, product

import pytest

from multrep import Coloring, membership


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def oracle_count_reps(system, n):
    """Loop over all ordered divisor tuples; no shared code with the
    library's factorization-based recursion."""
    parts = system.parts

    def rec(i, remaining):
        if i == len(parts) - 1:
            return 1 if membership(parts[i], remaining) else 0
        return sum(
            rec(i + 1, remaining // d)
            for d in naive_divisors(remaining)
            if membership(parts[i], d)
        )

    return rec(0, n)


def oracle_count_covers(s, families):
    """Assign each element of s to one of h slots, test every block."""
    elems = sorted(s)
    h = len(families)
    total = 0
    for word in product(range(h), repeat=len(elems)):
        blocks = [frozenset(e for e, w in zip(elems, word) if w == i) for i in range(h)]
        if all(f.contains_block(b) for f, b in zip(families, blocks)):
            total += 1
    return total


def sieve_squarefree(limit):
    """Mark multiples of p^2; returns the squarefree integers <= limit."""
    flags = [True] * (limit + 1)
    for p in range(2, int(limit**0.5) + 1):
        for q in range(p * p, limit + 1, p * p):
            flags[q] = False
    return [n for n in range(1, limit + 1) if flags[n]]


def pentagon_coloring():
    """C5 edges color 0, diagonals color 1; the classic triangle-free
    2-coloring of a 5-point ground set."""
    edges = {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}
    return Coloring(
        tuple(range(1, 6)),
        2,
        {
            frozenset(c): (0 if c in edges else 1)
            for c in combinations(range(1, 6), 2)
        },
    )


@pytest.fixture
def pentagon():
    return pentagon_coloring()
