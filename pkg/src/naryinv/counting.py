"""Exact counting of coefficient monomials with a prescribed weight.

A degree-``k`` monomial in the form's coefficients is a multiset of ``k``
indices; its *moments* are the coordinatewise sums of those indices.  The
weight of the monomial is a fixed affine function of its moments, so each
weight corresponds to at most one moment-target vector, and the number of
monomials of a given weight is the number of nonnegative integer solutions
of the resulting system.  That count is computed by exact dynamic
programming over the index set, with arbitrary-precision accumulation.
"""

from __future__ import annotations

import json
import os
from typing import Iterable

from .errors import ResourceLimitError
from .forms import enumerate_indices
from .weights import Weight, check_weight

MAX_DP_STATES = 100_000_000

CACHE_ENV_VAR = "NARY_CACHE_DIR"
CACHE_FILENAME = "weight-counts.jsonl"


def _check_degrees(d: int, k: int) -> None:
    if d < 1:
        raise ValueError(f"form degree d must be >= 1, got {d}")
    if k < 0:
        raise ValueError(f"monomial degree k must be >= 0, got {k}")


def moment_targets(n: int, d: int, k: int, weight) -> tuple[int, ...] | None:
    """Moment-target vector for monomials of degree ``k`` and given weight.

    Solving the weight equations for the moments gives

        ``T_s = (k*d - W)/n + weight[s] + ... + weight[n-2]``

    (0-based tail sums) where ``W = sum_r (r+1) * weight[r]``.  Returns
    ``None`` when no solution exists, i.e. when ``k*d - W`` is not divisible
    by ``n`` or some target would be negative; moments of a monomial are
    always nonnegative integers.  Any integer weight is accepted, dominant
    or not.
    """
    w = check_weight(n, weight)
    _check_degrees(d, k)
    weighted = sum((r + 1) * m for r, m in enumerate(w))
    base = k * d - weighted
    if base % n:
        return None
    base //= n
    targets = []
    tail = 0
    for s in range(n - 2, -1, -1):
        # tail holds w[s+1] + ... + w[n-2]
        targets.append(base + tail)
        if s:
            tail += w[s]
    targets.reverse()
    if any(t < 0 for t in targets):
        return None
    return tuple(targets)


def count_solutions(
    n: int,
    d: int,
    k: int,
    targets: Iterable[int],
    max_states: int = MAX_DP_STATES,
) -> int:
    """Number of index multisets of size ``k`` hitting the moment targets.

    Dynamic programming over the lexicographic index list; a state is the
    pair (remaining degree, remaining target vector).  States whose targets
    cannot be met by the indices still ahead are dropped.  Raises
    :class:`ResourceLimitError` if the live state count ever exceeds
    ``max_states``.
    """
    t0 = tuple(targets)
    _check_degrees(d, k)
    m = n - 1
    if len(t0) != m:
        raise ValueError(f"targets must have length n - 1 = {m}, got {len(t0)}")
    if any(t < 0 for t in t0):
        return 0
    indices = enumerate_indices(n, d)
    # future_max[p][s]: largest entry s among indices from position p on
    future_max = [(0,) * m]
    for idx in reversed(indices):
        prev = future_max[-1]
        future_max.append(tuple(max(prev[s], idx[s]) for s in range(m)))
    future_max.reverse()

    states: dict[tuple[int, tuple[int, ...]], int] = {(k, t0): 1}
    for pos, idx in enumerate(indices):
        ahead = future_max[pos + 1]
        nxt: dict[tuple[int, tuple[int, ...]], int] = {}
        for (r, t), ways in states.items():
            top = r
            for s in range(m):
                if idx[s]:
                    top = min(top, t[s] // idx[s])
            for mult in range(top + 1):
                rr = r - mult
                tt = tuple(t[s] - mult * idx[s] for s in range(m))
                if any(tt[s] > rr * ahead[s] for s in range(m)):
                    continue
                key = (rr, tt)
                nxt[key] = nxt.get(key, 0) + ways
            if len(nxt) > max_states:
                raise ResourceLimitError(
                    f"solution-count DP exceeded {max_states} states"
                )
        states = nxt
    return states.get((0, (0,) * m), 0)


def weight_multiplicity(
    n: int,
    d: int,
    k: int,
    weight,
    max_states: int = MAX_DP_STATES,
    cache: "CountCache | None" = None,
) -> int:
    """Number of degree-``k`` coefficient monomials of the given weight.

    Returns 0 whenever the moment system is infeasible.  Equals the
    multiplicity of ``weight`` in the k-th symmetric power of the
    coefficient space.
    """
    w = check_weight(n, weight)
    targets = moment_targets(n, d, k, w)
    if targets is None:
        return 0
    if cache is not None:
        hit = cache.get(n, d, k, w)
        if hit is not None:
            return hit
    value = count_solutions(n, d, k, targets, max_states=max_states)
    if cache is not None:
        cache.put(n, d, k, w, value)
    return value


class CountCache:
    """On-disk memo of weight multiplicities, one JSON record per line.

    Record format: ``{"n":..,"d":..,"k":..,"mu":[..],"count":"<decimal>"}``.
    Counts are stored as decimal strings because they can exceed 64 bits.
    The file is append-only; existing records are loaded once at open.
    """

    def __init__(self, directory: str):
        os.makedirs(directory, exist_ok=True)
        self.path = os.path.join(directory, CACHE_FILENAME)
        self._mem: dict[tuple[int, int, int, Weight], int] = {}
        if os.path.exists(self.path):
            with open(self.path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    key = (rec["n"], rec["d"], rec["k"], tuple(rec["mu"]))
                    self._mem[key] = int(rec["count"])

    def get(self, n: int, d: int, k: int, weight: Weight) -> int | None:
        return self._mem.get((n, d, k, weight))

    def put(self, n: int, d: int, k: int, weight: Weight, value: int) -> None:
        key = (n, d, k, weight)
        if key in self._mem:
            return
        self._mem[key] = value
        rec = {"n": n, "d": d, "k": k, "mu": list(weight), "count": str(value)}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec) + "\n")

    def __len__(self) -> int:
        return len(self._mem)


def cache_from_env() -> CountCache | None:
    """Cache rooted at ``$NARY_CACHE_DIR``, or ``None`` when unset."""
    directory = os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    return CountCache(directory)
