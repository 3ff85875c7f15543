"""Ordered multiplicative (and additive) representation counting.

Counting strategy: factor n once, then recursively pick the i-th factor
from the divisors of the remaining cofactor, pruning any prefix whose
coordinate fails membership in its part.  Counts are exact Python
integers; window scans return the min/max over a finite range, which is
evidence about the tails, never a limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FactorizationLimitError
from .integer_sets import (
    MAX_INT,
    MultiplicativeSystem,
    SetDescription,
    basis_system,
    factorize,
    membership,
)

DEFAULT_TUPLE_CAP = 64


@dataclass(frozen=True)
class RepWitness:
    """A count g(n) with an explicit (possibly truncated) tuple listing."""

    n: int
    count: int
    tuples: tuple[tuple[int, ...], ...]
    truncated: bool

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "count": self.count,
            "tuples": [list(t) for t in self.tuples],
            "truncated": self.truncated,
        }


@dataclass(frozen=True)
class WindowStats:
    lo: int
    hi: int
    min_count: int
    argmin: int
    max_count: int
    argmax: int

    def to_record(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "min_count": self.min_count,
            "argmin": self.argmin,
            "max_count": self.max_count,
            "argmax": self.argmax,
        }


def _divisor_items(factors: dict[int, int]):
    """All divisors of the integer with the given factorization, with
    their own factorizations, sorted by divisor value."""
    items: list[tuple[int, dict[int, int]]] = [(1, {})]
    for p, e in factors.items():
        grown = []
        for d, f in items:
            grown.append((d, f))
            v = d
            for a in range(1, e + 1):
                v *= p
                nf = dict(f)
                nf[p] = a
                grown.append((v, nf))
        items = grown
    items.sort(key=lambda item: item[0])
    return items


def count_system_reps(
    system: MultiplicativeSystem, n: int, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> RepWitness:
    """Exact number of ordered tuples (b_1,...,b_h) with b_i in parts[i]
    and product n, plus up to tuple_cap explicit tuples."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_INT:
        raise FactorizationLimitError(f"{n} exceeds 64-bit range")
    parts = system.parts
    h = len(parts)
    factors = factorize(n)
    count = 0
    found: list[tuple[int, ...]] = []

    def rec(i: int, rem: dict[int, int], rem_value: int, prefix: tuple[int, ...]):
        nonlocal count
        if i == h - 1:
            if membership(parts[i], rem_value):
                count += 1
                if len(found) < tuple_cap:
                    found.append(prefix + (rem_value,))
            return
        for d, df in _divisor_items(rem):
            if membership(parts[i], d):
                nrem = {p: e - df.get(p, 0) for p, e in rem.items()}
                nrem = {p: e for p, e in nrem.items() if e}
                rec(i + 1, nrem, rem_value // d, prefix + (d,))

    rec(0, factors, n, ())
    return RepWitness(n, count, tuple(found), truncated=count > len(found))


def count_basis_reps(
    b: SetDescription, h: int, n: int, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> RepWitness:
    """All parts equal to b: the h-fold multiplicative representation count."""
    return count_system_reps(basis_system(b, h), n, tuple_cap)


def count_additive_reps(a: SetDescription, h: int, n: int) -> int:
    """Number of ordered h-tuples in a^h summing to n (n >= 0)."""
    if h < 2:
        raise ValueError("h must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    elems = [v for v in range(0, n + 1) if membership(a, v)]
    ways = [0] * (n + 1)
    for v in elems:
        ways[v] = 1
    for _ in range(h - 1):
        nxt = [0] * (n + 1)
        for s, w in enumerate(ways):
            if w:
                for v in elems:
                    if s + v > n:
                        break
                    nxt[s + v] += w
        ways = nxt
    return ways[n]


def scan_counts(system: MultiplicativeSystem, lo: int, hi: int):
    """Yield (n, g(n)) for n in [lo, hi]."""
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    for n in range(lo, hi + 1):
        yield n, count_system_reps(system, n, tuple_cap=0).count


def window_stats(system: MultiplicativeSystem, lo: int, hi: int) -> WindowStats:
    """Exact min/max of g over [lo, hi]; ties resolved to the smallest n."""
    if lo < 2 or hi < lo:
        raise ValueError("need 2 <= lo <= hi")
    min_count = max_count = None
    argmin = argmax = lo
    for n, c in scan_counts(system, lo, hi):
        if min_count is None or c < min_count:
            min_count, argmin = c, n
        if max_count is None or c > max_count:
            max_count, argmax = c, n
    return WindowStats(lo, hi, min_count, argmin, max_count, argmax)
