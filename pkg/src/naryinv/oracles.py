"""Independent verification paths for the dimension formulas.

Nothing here shares machinery with the signed-orbit route: characters are
tallied monomial by monomial, irreducible weight multiplicities come from
the Freudenthal recursion, highest weights are extracted by greedy
stripping, and the binary case is a bounded-partition difference.  These
oracles exist to certify the main formulas on small instances, not to be
fast at scale.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

from .errors import ResourceLimitError
from .forms import enumerate_indices, index_count, weight_from_moments
from .weights import (
    Weight,
    check_weight,
    from_ambient,
    signed_orbit_terms,
    to_ambient,
)

MAX_CHARACTER_MONOMIALS = 10_000_000


@dataclass(frozen=True)
class CharacterTable:
    """Weight multiplicities of the degree-``k`` coefficient monomials."""

    n: int
    d: int
    k: int
    multiplicities: dict[Weight, int] = field(repr=False)

    def total(self) -> int:
        return sum(self.multiplicities.values())


def symmetric_power_dimension(n: int, d: int, k: int) -> int:
    """Dimension of the space of degree-``k`` coefficient monomials."""
    return math.comb(index_count(n, d) + k - 1, k)


def brute_character(
    n: int, d: int, k: int, max_monomials: int = MAX_CHARACTER_MONOMIALS
) -> CharacterTable:
    """Tally the weight of every degree-``k`` monomial in the coefficients.

    Exhaustive enumeration of all index multisets of size ``k``; the total
    mass of the table is the full symmetric-power dimension.
    """
    if k < 0:
        raise ValueError(f"monomial degree k must be >= 0, got {k}")
    total = symmetric_power_dimension(n, d, k)
    if total > max_monomials:
        raise ResourceLimitError(
            f"character enumeration needs {total} monomials, above the "
            f"limit {max_monomials}"
        )
    indices = enumerate_indices(n, d)
    table: dict[Weight, int] = {}
    for combo in itertools.combinations_with_replacement(indices, k):
        moments = [0] * (n - 1)
        for idx in combo:
            for s in range(n - 1):
                moments[s] += idx[s]
        w = weight_from_moments(n, d, k, moments)
        table[w] = table.get(w, 0) + 1
    return CharacterTable(n=n, d=d, k=k, multiplicities=table)


def _check_dominant(n: int, highest) -> Weight:
    w = check_weight(n, highest, "highest weight")
    if any(x < 0 for x in w):
        raise ValueError(f"highest weight must be dominant, got {w}")
    return w


def _descending_ambient(weight: Weight) -> tuple[int, ...]:
    return tuple(sorted(to_ambient(weight), reverse=True))


def _dominated_partitions(top: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Descending integer vectors with the same sum, dominated by ``top``.

    Dominance means every prefix sum is bounded by the corresponding prefix
    sum of ``top``; with equal totals the last entry is then automatically
    nonnegative.  These are exactly the dominant weights of the irreducible
    module with highest weight ``top`` (in equal-sum ambient form).
    """
    n = len(top)
    prefix_top = list(itertools.accumulate(top))
    total = prefix_top[-1]
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], used: int) -> None:
        pos = len(prefix)
        if pos == n - 1:
            last = total - used
            if 0 <= last <= prefix[-1]:
                out.append(tuple(prefix) + (last,))
            return
        hi = min(prefix[-1] if prefix else total, prefix_top[pos] - used)
        # each later entry is at most the current one, so v must cover the
        # remaining total spread over the slots left
        lo = -(-(total - used) // (n - pos))
        for v in range(lo, hi + 1):
            prefix.append(v)
            extend(prefix, used + v)
            prefix.pop()

    extend([], 0)
    return out


@functools.cache
def _dominant_multiplicity_table(
    n: int, highest: Weight
) -> dict[tuple[int, ...], int]:
    """Freudenthal recursion over the dominant weights of one module.

    Keys are descending ambient vectors sharing the highest weight's entry
    sum.  Weights are processed from the top of the dominance order down,
    so every weight reached by adding a positive root is already computed.
    Inner products use the scaled form ``n * <x, y> - sum(x) * sum(y)``,
    which is the trace form with the mean projected out, times ``n``; the
    recursion only ever uses ratios, so the scaling cancels.
    """
    top = _descending_ambient(highest)
    parts = _dominated_partitions(top)
    parts.sort(key=lambda q: sum((n - t) * (top[t] - q[t]) for t in range(n)))
    positive_roots = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rho = tuple(range(n - 1, -1, -1))

    def norm2(v: tuple[int, ...]) -> int:
        return n * sum(x * x for x in v) - sum(v) ** 2

    top_norm = norm2(tuple(top[t] + rho[t] for t in range(n)))
    table: dict[tuple[int, ...], int] = {top: 1}
    for q in parts[1:]:
        numerator = 0
        for a, b in positive_roots:
            v = list(q)
            while True:
                v[a] += 1
                v[b] -= 1
                mult = table.get(tuple(sorted(v, reverse=True)))
                if not mult:
                    # weights along a root string form an interval, so the
                    # first miss ends the string
                    break
                numerator += mult * (v[a] - v[b])
        denominator = top_norm - norm2(tuple(q[t] + rho[t] for t in range(n)))
        value, remainder = divmod(2 * n * numerator, denominator)
        if remainder or value <= 0:
            raise AssertionError(
                f"Freudenthal recursion produced a non-integer or nonpositive "
                f"multiplicity at {q} in module {highest}"
            )
        table[q] = value
    return table


def freudenthal_multiplicity(n: int, highest, weight) -> int:
    """Multiplicity of ``weight`` in the irreducible module with the given
    dominant highest weight; 0 for weights outside the module."""
    top_weight = _check_dominant(n, highest)
    table = _dominant_multiplicity_table(n, top_weight)
    q = _descending_ambient(check_weight(n, weight))
    gap = sum(_descending_ambient(top_weight)) - sum(q)
    if gap % n:
        return 0
    lift = gap // n
    shifted = tuple(x + lift for x in q)
    return table.get(shifted, 0)


def alternating_multiplicity_sum(n: int, highest) -> int:
    """Parity-signed sum of the module's multiplicities over the dominant
    orbit-difference weights; equals 1 for the zero highest weight and 0
    for every other dominant weight."""
    w = _check_dominant(n, highest)
    return sum(
        coef * freudenthal_multiplicity(n, w, dominant)
        for dominant, coef in signed_orbit_terms(n)
    )


def weyl_dimension(n: int, highest) -> int:
    """Dimension of the irreducible module, by the product formula."""
    w = _check_dominant(n, highest)
    shifted = [a + t for t, a in enumerate(to_ambient(w))]
    numerator = 1
    denominator = 1
    for a in range(n):
        for b in range(a + 1, n):
            numerator *= shifted[b] - shifted[a]
            denominator *= b - a
    value, remainder = divmod(numerator, denominator)
    assert remainder == 0
    return value


def strip_decompose(table: CharacterTable) -> dict[Weight, int]:
    """Greedy top-down extraction of irreducible multiplicities.

    Restricts the character to its dominant weights (no information is lost:
    characters are symmetric under the Weyl group), walks them downward in
    the dominance order, reads the remaining multiplicity at each weight as
    the multiplicity of the irreducible with that highest weight, and
    subtracts that module's dominant character via the Freudenthal table.
    The zero-weight entry of the result is an independent computation of the
    invariant dimension.  Raises if any remaining multiplicity would go
    negative, which would mean the input was not a genuine character.
    """
    n = table.n
    remaining = {
        w: m for w, m in table.multiplicities.items() if all(x >= 0 for x in w)
    }

    def height_key(w: Weight) -> tuple[int, tuple[int, ...]]:
        ambient = to_ambient(w)
        return (sum(ambient), tuple(sorted(ambient, reverse=True)))

    out: dict[Weight, int] = {}
    for w in sorted(remaining, key=height_key, reverse=True):
        count = remaining[w]
        if count == 0:
            continue
        if count < 0:
            raise AssertionError(
                f"negative remaining multiplicity {count} at {w} while stripping"
            )
        out[w] = count
        module = _dominant_multiplicity_table(n, w)
        for q, mult in module.items():
            target = from_ambient(tuple(sorted(q)))
            left = remaining.get(target, 0) - count * mult
            if left < 0:
                raise AssertionError(
                    f"stripping {w} drove the multiplicity at {target} to {left}"
                )
            remaining[target] = left
    assert all(v == 0 for v in remaining.values())
    return out


def binary_invariant_dimension(d: int, k: int) -> int:
    """Invariant dimension for binary forms via bounded partitions.

    Zero when ``k * d`` is odd; otherwise the number of partitions of
    ``k*d/2`` fitting in a ``k`` by ``d`` box minus the number for
    ``k*d/2 - 1``.  Uses its own partition recursion, independent of the
    moment-system dynamic programming.
    """
    if d < 1:
        raise ValueError(f"form degree d must be >= 1, got {d}")
    if k < 0:
        raise ValueError(f"monomial degree k must be >= 0, got {k}")
    if (k * d) % 2:
        return 0
    half = k * d // 2
    return _box_partitions(half, k, d) - _box_partitions(half - 1, k, d)


@functools.cache
def _box_partitions(m: int, parts: int, largest: int) -> int:
    """Partitions of ``m`` into at most ``parts`` parts, each <= ``largest``."""
    if m < 0:
        return 0
    if m == 0:
        return 1
    if parts == 0 or largest == 0:
        return 0
    # split on whether a part of maximal size occurs
    return _box_partitions(m, parts, largest - 1) + _box_partitions(
        m - largest, parts - 1, largest
    )
