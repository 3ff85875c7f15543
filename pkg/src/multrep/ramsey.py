"""Finite monochromatic-subset search, iterated chains, product colorings.

Everything here is exact and finite: a coloring is a total map from the
k-subsets of a finite ground set to color indices.  A search can end
three ways: a witness, a definite None (no such subset exists at this
finite scale), or a budget error.  The last two are never conflated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapacityOverflowError, SearchBudgetExceeded

DEFAULT_NODE_BUDGET = 5_000_000

INDEX_CAPACITY = 2**63 - 1


@dataclass
class Coloring:
    """Total coloring of the k-subsets of a finite ordered ground set."""

    ground: tuple[int, ...]
    k: int
    colors: dict[frozenset, int]
    max_color: int = field(init=False)

    def __post_init__(self):
        self.ground = tuple(sorted(set(self.ground)))
        if self.k < 0:
            raise ValueError("k must be >= 0")
        expected = {frozenset(c) for c in combinations(self.ground, self.k)}
        given = set(self.colors)
        if given != expected:
            missing = expected - given
            extra = given - expected
            raise ValueError(
                f"coloring is not total on the {self.k}-subsets "
                f"(missing {len(missing)}, extraneous {len(extra)})"
            )
        if any(c < 0 for c in self.colors.values()):
            raise ValueError("color indices must be >= 0")
        self.max_color = max(self.colors.values(), default=0)

    def color_of(self, subset) -> int:
        return self.colors[frozenset(subset)]


@dataclass(frozen=True)
class HomogeneousChain:
    """Decreasing subsets X_0 >= X_1 >= ... with [X_k]^k monochromatic."""

    subsets: tuple[tuple[int, ...], ...]
    epsilons: tuple  # ints, or tuples of ints for per-index chains


def constant_coloring(ground, k: int, color: int = 0) -> Coloring:
    ground = tuple(sorted(set(ground)))
    return Coloring(
        ground, k, {frozenset(c): color for c in combinations(ground, k)}
    )


def random_coloring(ground, k: int, num_colors: int, rng) -> Coloring:
    ground = tuple(sorted(set(ground)))
    return Coloring(
        ground,
        k,
        {
            frozenset(c): rng.randrange(num_colors)
            for c in combinations(ground, k)
        },
    )


def homogeneous_color(coloring: Coloring, subset) -> int | None:
    """Independent checker: the single color of all k-subsets of subset,
    or None if two of them differ.  Enumerates every k-subset."""
    subset = tuple(sorted(subset))
    seen = None
    for c in combinations(subset, coloring.k):
        col = coloring.color_of(c)
        if seen is None:
            seen = col
        elif col != seen:
            return None
    return seen


def find_homogeneous(
    coloring: Coloring,
    m: int,
    budget: int = DEFAULT_NODE_BUDGET,
    within=None,
):
    """Lexicographically least size-m subset with all k-subsets one color.

    Returns None when no such subset exists in this finite ground set;
    raises SearchBudgetExceeded if the node budget runs out first.
    """
    ground = tuple(sorted(within)) if within is not None else coloring.ground
    if not set(ground) <= set(coloring.ground):
        raise ValueError("search space must lie inside the coloring's ground")
    k = coloring.k
    if m > len(ground) or k > m:
        return None
    if k == 0:
        return ground[:m]

    nodes = 0

    def extend(candidate: list[int], start: int, color):
        nonlocal nodes
        if len(candidate) == m:
            return tuple(candidate)
        # not enough elements left to reach size m
        for idx in range(start, len(ground) - (m - len(candidate)) + 1):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(
                    f"node budget {budget} exhausted before resolution"
                )
            x = ground[idx]
            candidate.append(x)
            new_color = color
            ok = True
            if len(candidate) >= k:
                for rest in combinations(candidate[:-1], k - 1):
                    col = coloring.color_of(rest + (x,))
                    if new_color is None:
                        new_color = col
                    elif col != new_color:
                        ok = False
                        break
            if ok:
                found = extend(candidate, idx + 1, new_color)
                if found is not None:
                    return found
            candidate.pop()
        return None

    return extend([], 0, None)


def iterated_chain(
    colorings, sizes, budget: int = DEFAULT_NODE_BUDGET
) -> HomogeneousChain | None:
    """Build X_0 >= X_1 >= ... >= X_K with [X_k]^k monochromatic under
    colorings[k], |X_k| >= sizes[k].  Level k searches inside X_{k-1}.

    Returns None when the finite ground set cannot support the requested
    sizes; raises SearchBudgetExceeded on budget exhaustion.
    """
    colorings = list(colorings)
    sizes = list(sizes)
    if len(colorings) != len(sizes):
        raise ValueError("one target size per level is required")
    if not colorings:
        raise ValueError("need at least the k=0 level")
    for k, c in enumerate(colorings):
        if c.k != k:
            raise ValueError(f"level {k} coloring has k = {c.k}")
        if c.ground != colorings[0].ground:
            raise ValueError("all levels must share one ground set")
    if any(sizes[k] < k for k in range(len(sizes))):
        raise ValueError("sizes[k] must be >= k")
    if any(sizes[k] < sizes[k + 1] for k in range(len(sizes) - 1)):
        raise ValueError("sizes must be weakly decreasing")

    ground = colorings[0].ground
    if sizes[0] > len(ground):
        return None
    subsets = [ground]
    epsilons = [colorings[0].color_of(frozenset())]
    current = ground
    for k in range(1, len(colorings)):
        found = find_homogeneous(
            colorings[k], sizes[k], budget=budget, within=current
        )
        if found is None:
            return None
        eps = homogeneous_color(colorings[k], found)
        subsets.append(found)
        epsilons.append(eps)
        current = found
    return HomogeneousChain(tuple(subsets), tuple(epsilons))


def verify_chain(colorings, chain: HomogeneousChain) -> bool:
    """Re-check an emitted chain against the raw colorings: containment
    plus monochromaticity of [X_n]^k for every n >= k."""
    subsets = chain.subsets
    for i in range(1, len(subsets)):
        if not set(subsets[i]) <= set(subsets[i - 1]):
            return False
    for k, coloring in enumerate(colorings):
        eps = chain.epsilons[k]
        for n in range(k, len(subsets)):
            for c in combinations(sorted(subsets[n]), k):
                if coloring.color_of(c) != eps:
                    return False
    return True


def product_coloring(colorings) -> Coloring:
    """Combine colorings of the same ground and k into one whose color is
    the tuple of factor colors, encoded row-major (first factor slowest)."""
    colorings = list(colorings)
    if not colorings:
        raise ValueError("need at least one factor coloring")
    first = colorings[0]
    for c in colorings[1:]:
        if c.ground != first.ground or c.k != first.k:
            raise ValueError("factors must share ground set and k")
    radices = [c.max_color + 1 for c in colorings]
    capacity = 1
    for r in radices:
        capacity *= r
        if capacity > INDEX_CAPACITY:
            raise CapacityOverflowError("product color index exceeds capacity")
    combined = {}
    for subset in first.colors:
        idx = 0
        for c, r in zip(colorings, radices):
            idx = idx * r + c.colors[subset]
        combined[subset] = idx
    out = Coloring(first.ground, first.k, combined)
    # a factor may never use its top index on this ground; keep the full radix
    out.max_color = capacity - 1
    return out


def decode_product_index(index: int, radices) -> tuple[int, ...]:
    out = []
    for r in reversed(list(radices)):
        out.append(index % r)
        index //= r
    return tuple(reversed(out))


def doubly_iterated_chain(
    per_index_colorings, sizes, budget: int = DEFAULT_NODE_BUDGET
) -> HomogeneousChain | None:
    """Per level k, take the product over the index family, run the
    iterated chain, and decode each epsilon back into a tuple of
    per-index colors."""
    per_index_colorings = [list(level) for level in per_index_colorings]
    for k, level in enumerate(per_index_colorings):
        if not level:
            raise ValueError(f"empty index set at level {k}")
    products = [product_coloring(level) for level in per_index_colorings]
    chain = iterated_chain(products, sizes, budget=budget)
    if chain is None:
        return None
    decoded = tuple(
        decode_product_index(
            eps, [c.max_color + 1 for c in per_index_colorings[k]]
        )
        for k, eps in enumerate(chain.epsilons)
    )
    return HomogeneousChain(chain.subsets, decoded)


# ---------------------------------------------------------------------------
# interchange format
# ---------------------------------------------------------------------------

def dump_coloring(coloring: Coloring) -> str:
    lines = [
        "ground: " + " ".join(str(x) for x in coloring.ground),
        f"k: {coloring.k}",
    ]
    for c in combinations(coloring.ground, coloring.k):
        lines.append(
            " ".join(str(x) for x in c) + " : " + str(coloring.colors[frozenset(c)])
        )
    return "\n".join(lines) + "\n"


def load_coloring(text: str) -> Coloring:
    """Parse the text format: a ground line, a k line, then one
    "elements : color" line per k-subset.  Totality is validated."""
    ground = None
    k = None
    colors: dict[frozenset, int] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ground:"):
            ground = tuple(int(x) for x in line[len("ground:"):].split())
            continue
        if line.startswith("k:"):
            k = int(line[len("k:"):].strip())
            continue
        if ":" not in line:
            raise ValueError(f"bad coloring line: {raw!r}")
        left, right = line.rsplit(":", 1)
        subset = frozenset(int(x) for x in left.split())
        if subset in colors:
            raise ValueError(f"duplicate subset in coloring: {sorted(subset)}")
        colors[subset] = int(right.strip())
    if ground is None or k is None:
        raise ValueError("coloring file needs 'ground:' and 'k:' lines")
    return Coloring(ground, k, colors)
