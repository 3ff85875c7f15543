"""Ordered disjoint covers of a finite set by blocks from per-slot families.

count_ordered_covers(S, (F_1,...,F_h)) counts the ordered h-tuples
(A_1,...,A_h) with A_i in F_i, pairwise disjoint, union S.  With the
image families of a multiplicative system over a prime universe this
equals the system's representation count at the corresponding squarefree
integer, which verify_correspondence checks from both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceLimitError
from .integer_sets import SetDescription, membership
from .squarefree_map import phi
from .repcount import count_system_reps
from .integer_sets import MultiplicativeSystem

SIZE_CAP_H2 = 20
SIZE_CAP_DEFAULT = 13


class FamilyDescription:
    """Decidable membership for finite blocks."""

    def contains_block(self, block: frozenset[int]) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Explicit(FamilyDescription):
    blocks: frozenset[frozenset[int]]

    def contains_block(self, block: frozenset[int]) -> bool:
        return block in self.blocks


def explicit_family(blocks) -> Explicit:
    return Explicit(frozenset(frozenset(b) for b in blocks))


@dataclass(frozen=True)
class ByCardinality(FamilyDescription):
    """All subsets (of the universe, when given) whose size is allowed."""

    sizes: frozenset[int]
    universe: frozenset[int] | None = None

    def contains_block(self, block: frozenset[int]) -> bool:
        if self.universe is not None and not block <= self.universe:
            return False
        return len(block) in self.sizes


def by_cardinality(sizes, universe=None) -> ByCardinality:
    return ByCardinality(
        frozenset(sizes), None if universe is None else frozenset(universe)
    )


@dataclass(frozen=True)
class ImageOfSet(FamilyDescription):
    """Prime sets whose product lies in a base set, within a prime universe."""

    base: SetDescription
    universe: frozenset[int]

    def contains_block(self, block: frozenset[int]) -> bool:
        if not block <= self.universe:
            return False
        prod = 1
        for p in block:
            prod *= p
        return membership(self.base, prod)


def image_family(base: SetDescription, universe) -> ImageOfSet:
    return ImageOfSet(base, frozenset(universe))


def count_ordered_covers(
    s, families, max_size: int | None = None
) -> int:
    """Exact count of ordered disjoint covers of s by family blocks."""
    fams = tuple(families)
    if len(fams) < 2:
        raise ValueError("need h >= 2 families")
    elems = tuple(sorted(s))
    cap = max_size if max_size is not None else (
        SIZE_CAP_H2 if len(fams) == 2 else SIZE_CAP_DEFAULT
    )
    if len(elems) > cap:
        raise ResourceLimitError(
            f"|S| = {len(elems)} exceeds the size cap {cap}"
        )

    def rec(rem: tuple[int, ...], fams) -> int:
        if len(fams) == 1:
            return 1 if fams[0].contains_block(frozenset(rem)) else 0
        head = fams[0]
        # cardinality families admit only a few block sizes
        if isinstance(head, ByCardinality):
            block_sizes = [r for r in head.sizes if r <= len(rem)]
        else:
            block_sizes = range(len(rem) + 1)
        total = 0
        for r in block_sizes:
            for block in combinations(rem, r):
                if head.contains_block(frozenset(block)):
                    rest = tuple(x for x in rem if x not in block)
                    total += rec(rest, fams[1:])
        return total

    return rec(elems, fams)


def multinomial(n: int, ks) -> int:
    """n! / (k_1! ... k_h!), exact; the ks must sum to n."""
    ks = list(ks)
    if n < 0 or any(k < 0 for k in ks):
        raise ValueError("n and all ks must be >= 0")
    if sum(ks) != n:
        raise ValueError("ks must sum to n")
    out = math.factorial(n)
    for k in ks:
        out //= math.factorial(k)
    return out


@dataclass(frozen=True)
class CorrespondenceReport:
    q: int
    system_count: int
    cover_count: int
    equal: bool

    def to_record(self) -> dict:
        return {
            "q": self.q,
            "system_count": self.system_count,
            "cover_count": self.cover_count,
            "equal": self.equal,
        }


def verify_correspondence(
    system: MultiplicativeSystem, q: int, universe
) -> CorrespondenceReport:
    """Check g(q) against the ordered-cover count of phi(q) under the
    system's image families.  Inequality indicates an implementation bug."""
    s = phi(q).as_frozenset()
    universe = frozenset(universe)
    if not s <= universe:
        raise ValueError("phi(q) must be contained in the universe")
    fams = [image_family(part, universe) for part in system.parts]
    cover = count_ordered_covers(s, fams, max_size=len(s))
    sys_count = count_system_reps(system, q, tuple_cap=0).count
    return CorrespondenceReport(q, sys_count, cover, sys_count == cover)
