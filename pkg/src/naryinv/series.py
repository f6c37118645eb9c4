"""Generating-series route to the same counts.

The coefficient monomials of the form, graded by (degree, moment vector),
have the multigraded generating series

    prod over indices i of 1 / (1 - t * q^i)

where ``q^i`` tracks the moment contribution of index ``i``.  Expanding the
product up to a degree bound in ``t`` tabulates every weight multiplicity
at once, giving a computation path independent of the dynamic-programming
count.  Exponent bookkeeping is done directly in integer moment space; the
rational shift relating a weight to its extraction point is carried
explicitly and checked for integrality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable

from .errors import ResourceLimitError, TruncationError
from .forms import enumerate_indices
from .weights import check_weight, signed_orbit_terms

MAX_SERIES_TERMS = 5_000_000


@dataclass(frozen=True)
class TruncatedSeries:
    """Sparse truncated expansion of the coefficient generating series.

    ``coefficients`` maps ``(degree in t, moment vector)`` to an exact
    integer count.  Only degrees up to ``degree_bound`` are stored; every
    stored moment component lies in ``[0, d * degree_bound]``.
    """

    n: int
    d: int
    degree_bound: int
    coefficients: dict[tuple[int, tuple[int, ...]], int] = field(repr=False)

    def coefficient(self, k: int, moments: Iterable[int]) -> int:
        """Stored coefficient at ``t^k q^moments`` (0 if absent)."""
        if k < 0:
            raise ValueError(f"degree k must be >= 0, got {k}")
        if k > self.degree_bound:
            raise TruncationError(
                f"degree {k} beyond truncation bound {self.degree_bound}"
            )
        return self.coefficients.get((k, tuple(moments)), 0)


def expand_generating_series(
    n: int,
    d: int,
    degree_bound: int,
    max_terms: int = MAX_SERIES_TERMS,
) -> TruncatedSeries:
    """Expand the product of geometric series up to ``t^degree_bound``.

    Each index contributes an unbounded geometric factor; multiplying one in
    amounts to the cumulative-sum recurrence

        ``new[k][m] = old[k][m] + new[k - 1][m - i]``

    which is realised in place by sweeping ``k`` upward.  Raises
    :class:`ResourceLimitError` if the coefficient table would exceed
    ``max_terms`` entries.
    """
    if degree_bound < 0:
        raise ValueError(f"degree_bound must be >= 0, got {degree_bound}")
    zero = (0,) * (n - 1)
    layers: list[dict[tuple[int, ...], int]] = [
        {} for _ in range(degree_bound + 1)
    ]
    layers[0][zero] = 1
    total = 1
    for idx in enumerate_indices(n, d):
        for k in range(1, degree_bound + 1):
            target_layer = layers[k]
            for mom, value in layers[k - 1].items():
                key = tuple(mom[s] + idx[s] for s in range(n - 1))
                if key in target_layer:
                    target_layer[key] += value
                else:
                    target_layer[key] = value
                    total += 1
                    if total > max_terms:
                        raise ResourceLimitError(
                            f"series expansion exceeded {max_terms} stored terms"
                        )
    coefficients = {
        (k, mom): v for k, layer in enumerate(layers) for mom, v in layer.items()
    }
    return TruncatedSeries(n=n, d=d, degree_bound=degree_bound, coefficients=coefficients)


def moment_shift(n: int, weight) -> tuple[Fraction, ...]:
    """Rational shift relating a weight to its series extraction point.

    Entry ``s`` (0-based) is ``(1/n) * sum_r (r+1) * weight[r]`` minus the
    tail sum ``weight[s+1] + ... + weight[n-2]``; each entry times ``n`` is
    an integer.  For a monomial degree ``k`` the moment targets of the
    weight are ``k*d/n - shift`` whenever those values are integers.
    """
    w = check_weight(n, weight)
    head = Fraction(sum((r + 1) * m for r, m in enumerate(w)), n)
    return tuple(head - sum(w[s + 1 :]) for s in range(n - 1))


def invariant_dimension_by_series(
    n: int,
    d: int,
    k: int,
    series: TruncatedSeries | None = None,
    max_terms: int = MAX_SERIES_TERMS,
) -> int:
    """Invariant dimension read off the truncated generating series.

    Evaluates the signed orbit sum term by term: each dominant term is
    turned into a shifted extraction point, and terms whose shifted targets
    are fractional or negative contribute nothing.  Pass a prebuilt
    ``series`` (with ``degree_bound >= k``) to amortise the expansion over
    several degrees.
    """
    if series is None:
        series = expand_generating_series(n, d, k, max_terms=max_terms)
    if series.n != n or series.d != d:
        raise ValueError(
            f"series was built for (n={series.n}, d={series.d}), "
            f"queried with (n={n}, d={d})"
        )
    if k > series.degree_bound:
        raise TruncationError(
            f"degree {k} beyond series truncation bound {series.degree_bound}"
        )
    extraction_base = Fraction(k * d, n)
    total = 0
    for dominant, coef in signed_orbit_terms(n):
        targets = [extraction_base - s for s in moment_shift(n, dominant)]
        if any(t.denominator != 1 or t < 0 for t in targets):
            continue
        total += coef * series.coefficient(k, tuple(int(t) for t in targets))
    return total


def dump_series(series: TruncatedSeries, stream: IO[str]) -> int:
    """Write one JSON record per nonzero coefficient; returns the count.

    Record format:
    ``{"k":..,"moments":[..],"coefficient":"<decimal>"}``, ordered by
    degree then moment vector.
    """
    written = 0
    for (k, mom), value in sorted(series.coefficients.items()):
        rec = {"k": k, "moments": list(mom), "coefficient": str(value)}
        stream.write(json.dumps(rec) + "\n")
        written += 1
    return written
