"""Symbolic descriptions of integer sets with decidable membership.

The vocabulary is closed: a fixed list of predicate kinds (naturals,
finite lists, geometric progressions, primes, squarefree integers,
smooth numbers over a prime class, unions, intersections).  Keeping the
kinds closed makes every description serializable and membership total.

Prime classes partition the primes by index residue: with modulus h,
class r contains the primes p_j (p_1 = 2, p_2 = 3, ...) with
j == r (mod h).  For any modulus the classes are pairwise disjoint,
nonempty, and cover all primes.
"""

from __future__ import annotations

import math
import re
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .errors import FactorizationLimitError, ResourceLimitError

MAX_INT = 2**63 - 1

DEFAULT_ELEMENT_CAP = 1_000_000

# ---------------------------------------------------------------------------
# prime machinery
# ---------------------------------------------------------------------------

_spf: list[int] = []          # smallest prime factor table, grown on demand
_primes: list[int] = []
_prime_index: dict[int, int] = {}


def _ensure_sieve(limit: int) -> None:
    global _spf, _primes, _prime_index
    if limit < len(_spf):
        return
    limit = max(limit, 2 * len(_spf), 1 << 16)
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    _spf = spf
    _primes = [n for n in range(2, limit + 1) if spf[n] == n]
    _prime_index = {p: i + 1 for i, p in enumerate(_primes)}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < len(_spf):
        return _spf[n] == n
    if n < (1 << 20):
        _ensure_sieve(n)
        return _spf[n] == n
    if n % 2 == 0:
        return n == 2
    # deterministic trial division; desk-scale n only
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    _ensure_sieve(n)
    return _primes[: bisect_right(_primes, n)]


def prime_index(p: int) -> int:
    """1-based index of the prime p (prime_index(2) == 1)."""
    _ensure_sieve(p)
    try:
        return _prime_index[p]
    except KeyError:
        raise ValueError(f"{p} is not prime") from None


def nth_prime(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    limit = 1 << 16
    while True:
        _ensure_sieve(limit)
        if len(_primes) >= k:
            return _primes[k - 1]
        limit *= 2


def factorize(n: int, budget: int = 1_000_000) -> dict[int, int]:
    """Prime factorization of n as {prime: exponent}.

    Trial division only; raises FactorizationLimitError when n is out of
    64-bit range or the unfactored cofactor exceeds the division budget.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_INT:
        raise FactorizationLimitError(f"{n} exceeds 64-bit range")
    factors: dict[int, int] = {}
    if n < (1 << 20):
        _ensure_sieve(min(max(n, 2), 1 << 20))
        while n > 1:
            p = _spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
        return factors
    bound = min(math.isqrt(n), budget)
    for p in primes_up_to(bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n > 1:
        if n <= bound * bound or is_prime(n):
            factors[n] = factors.get(n, 0) + 1
        else:
            raise FactorizationLimitError(
                f"cofactor {n} exceeds the trial-division budget"
            )
    return factors


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**a for d in ds for a in range(e + 1)]
    return sorted(ds)


# ---------------------------------------------------------------------------
# prime classes
# ---------------------------------------------------------------------------

class PrimeClass:
    def contains_prime(self, p: int) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class IndexResidue(PrimeClass):
    """Primes p_j with j == residue (mod modulus), indices starting at 1."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue out of range")

    def contains_prime(self, p: int) -> bool:
        return is_prime(p) and prime_index(p) % self.modulus == self.residue


@dataclass(frozen=True)
class ExplicitList(PrimeClass):
    primes: tuple[int, ...]

    def __post_init__(self):
        ps = tuple(sorted(set(self.primes)))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    def contains_prime(self, p: int) -> bool:
        return p in self.primes


@dataclass(frozen=True)
class Complement(PrimeClass):
    """Complement of another class within a finite prime universe."""

    inner: PrimeClass
    universe: tuple[int, ...]

    def __post_init__(self):
        ps = tuple(sorted(set(self.universe)))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "universe", ps)

    def contains_prime(self, p: int) -> bool:
        return p in self.universe and not self.inner.contains_prime(p)


# ---------------------------------------------------------------------------
# set descriptions
# ---------------------------------------------------------------------------

class SetDescription:
    """Base class; subclasses are immutable and hashable."""

    def contains(self, n: int) -> bool:
        raise NotImplementedError

    def iter_up_to(self, limit: int):
        # generic fallback: scan and filter
        return (n for n in range(1, limit + 1) if self.contains(n))


@dataclass(frozen=True)
class AllNaturals(SetDescription):
    def contains(self, n: int) -> bool:
        return n >= 1

    def iter_up_to(self, limit: int):
        return iter(range(1, limit + 1))


@dataclass(frozen=True)
class Singleton(SetDescription):
    """An explicit finite list of integers (0 allowed, for additive use)."""

    values: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.values)))
        if not vs:
            raise ValueError("Singleton needs at least one value")
        if vs[0] < 0:
            raise ValueError("values must be >= 0")
        object.__setattr__(self, "values", vs)

    def contains(self, n: int) -> bool:
        return n in self.values

    def iter_up_to(self, limit: int):
        return (v for v in self.values if 1 <= v <= limit)


@dataclass(frozen=True)
class PowersOf(SetDescription):
    """base**e for lo <= e <= hi; hi None means unbounded above."""

    base: int
    lo: int = 0
    hi: int | None = None

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.lo < 0:
            raise ValueError("lo must be >= 0")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError("hi must be >= lo")

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        e = 0
        while n % self.base == 0:
            n //= self.base
            e += 1
        if n != 1:
            return False
        return e >= self.lo and (self.hi is None or e <= self.hi)

    def iter_up_to(self, limit: int):
        e = self.lo
        v = self.base**e
        while v <= limit and (self.hi is None or e <= self.hi):
            yield v
            v *= self.base
            e += 1


@dataclass(frozen=True)
class Primes(SetDescription):
    def contains(self, n: int) -> bool:
        return is_prime(n)

    def iter_up_to(self, limit: int):
        return iter(primes_up_to(limit))


@dataclass(frozen=True)
class PrimesWithOne(SetDescription):
    def contains(self, n: int) -> bool:
        return n == 1 or is_prime(n)

    def iter_up_to(self, limit: int):
        if limit >= 1:
            yield 1
        yield from primes_up_to(limit)


@dataclass(frozen=True)
class Squarefree(SetDescription):
    def contains(self, n: int) -> bool:
        return n >= 1 and is_squarefree(n)


@dataclass(frozen=True)
class SmoothOver(SetDescription):
    """Positive integers all of whose prime factors lie in a prime class.

    1 belongs to every such set (empty product).
    """

    prime_class: PrimeClass

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        if n == 1:
            return True
        return all(self.prime_class.contains_prime(p) for p in factorize(n))


@dataclass(frozen=True)
class Union(SetDescription):
    parts: tuple[SetDescription, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Union needs at least one part")

    def contains(self, n: int) -> bool:
        return any(part.contains(n) for part in self.parts)


@dataclass(frozen=True)
class Intersection(SetDescription):
    parts: tuple[SetDescription, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Intersection needs at least one part")

    def contains(self, n: int) -> bool:
        return all(part.contains(n) for part in self.parts)


@lru_cache(maxsize=None)
def membership(d: SetDescription, n: int) -> bool:
    """True iff n belongs to the described set.  Total for 0 <= n <= 2^63-1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return d.contains(n)


def enumerate_up_to(
    d: SetDescription, limit: int, cap: int = DEFAULT_ELEMENT_CAP
) -> list[int]:
    """All members <= limit, ascending, no duplicates."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    out: set[int] = set()
    for v in d.iter_up_to(limit):
        out.add(v)
        if len(out) > cap:
            raise ResourceLimitError(
                f"enumeration exceeds the element cap {cap}"
            )
    return sorted(out)


# ---------------------------------------------------------------------------
# multiplicative systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicativeSystem:
    """Ordered h-tuple of set descriptions; the i-th factor is drawn from parts[i]."""

    parts: tuple[SetDescription, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("a system needs h >= 2 parts")

    @property
    def h(self) -> int:
        return len(self.parts)


def basis_system(b: SetDescription, h: int) -> MultiplicativeSystem:
    if h < 2:
        raise ValueError("h must be >= 2")
    return MultiplicativeSystem((b,) * h)


# ---------------------------------------------------------------------------
# config grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[(),])")

_SET_KINDS = (
    "AllNaturals",
    "Singleton",
    "PowersOf",
    "Primes",
    "PrimesWithOne",
    "Squarefree",
    "SmoothOver",
    "Union",
    "Intersection",
)


class _Parser:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ValueError(f"bad token near {text[pos:]!r}")
                break
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r}")

    def int_arg(self) -> int:
        tok = self.next()
        if not tok.isdigit():
            raise ValueError(f"expected integer, got {tok!r}")
        return int(tok)

    def args(self, parse_one):
        self.expect("(")
        out = [parse_one()]
        while self.peek() == ",":
            self.next()
            out.append(parse_one())
        self.expect(")")
        return out

    def set_expr(self) -> SetDescription:
        name = self.next()
        if name == "AllNaturals":
            return AllNaturals()
        if name == "Primes":
            return Primes()
        if name == "PrimesWithOne":
            return PrimesWithOne()
        if name == "Squarefree":
            return Squarefree()
        if name == "Singleton":
            return Singleton(tuple(self.args(self.int_arg)))
        if name == "PowersOf":
            vals = self.args(self._int_or_inf)
            if len(vals) not in (2, 3):
                raise ValueError("PowersOf takes (base, lo[, hi])")
            base, lo = vals[0], vals[1]
            hi = vals[2] if len(vals) == 3 else None
            if base is None or lo is None:
                raise ValueError("base and lo must be finite")
            return PowersOf(base, lo, hi)
        if name == "SmoothOver":
            (pc,) = self.args(self.class_expr)
            return SmoothOver(pc)
        if name == "Union":
            return Union(tuple(self.args(self.set_expr)))
        if name == "Intersection":
            return Intersection(tuple(self.args(self.set_expr)))
        raise ValueError(f"unknown set kind {name!r}")

    def _int_or_inf(self):
        tok = self.next()
        if tok == "inf":
            return None
        if not tok.isdigit():
            raise ValueError(f"expected integer or inf, got {tok!r}")
        return int(tok)

    def class_expr(self) -> PrimeClass:
        name = self.next()
        if name == "IndexResidue":
            vals = self.args(self.int_arg)
            if len(vals) != 2:
                raise ValueError("IndexResidue takes (modulus, residue)")
            return IndexResidue(vals[0], vals[1])
        if name == "ExplicitList":
            return ExplicitList(tuple(self.args(self.int_arg)))
        if name == "Complement":
            self.expect("(")
            inner = self.class_expr()
            universe = []
            while self.peek() == ",":
                self.next()
                universe.append(self.int_arg())
            self.expect(")")
            return Complement(inner, tuple(universe))
        raise ValueError(f"unknown prime class {name!r}")


def parse_set(text: str) -> SetDescription:
    p = _Parser(text)
    d = p.set_expr()
    if p.peek() is not None:
        raise ValueError(f"trailing input after expression: {p.peek()!r}")
    return d


def parse_system(text: str) -> MultiplicativeSystem:
    """Parse a ';'-separated list of set expressions into a system."""
    parts = [s for s in (chunk.strip() for chunk in text.split(";")) if s]
    return MultiplicativeSystem(tuple(parse_set(s) for s in parts))
