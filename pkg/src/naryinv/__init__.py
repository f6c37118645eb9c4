"""Exact invariant counting for n-ary forms.

Counts linearly independent homogeneous invariants, and more generally the
multiplicities of highest weights, in the graded coefficient algebra of an
n-ary form of degree d.  Everything is exact integer arithmetic: the main
route is a parity-signed sum of weight-multiplicity counts over a Weyl
orbit, a truncated generating series provides a second route to the same
numbers, and the :mod:`naryinv.oracles` module holds fully independent
verification paths (brute-force character tallies, Freudenthal
multiplicities with greedy stripping, and the classical bounded-partition
count for binary forms).
"""

from .counting import (
    CountCache,
    cache_from_env,
    count_solutions,
    moment_targets,
    weight_multiplicity,
)
from .dimensions import (
    hilbert_series_prefix,
    highest_weight_multiplicity,
    invariant_dimension,
    ternary_invariant_dimension,
)
from .errors import ResourceLimitError, TruncationError
from .forms import (
    MultiIndex,
    coefficient_weight,
    enumerate_indices,
    index_count,
    monomial_weight,
)
from .series import (
    TruncatedSeries,
    dump_series,
    expand_generating_series,
    invariant_dimension_by_series,
    moment_shift,
)
from .weights import (
    SignedOrbitTerm,
    Weight,
    dominant_representative,
    from_ambient,
    signed_orbit_terms,
    to_ambient,
    weyl_vector,
)
from . import oracles

__version__ = "0.1.0"

__all__ = [
    "CountCache",
    "MultiIndex",
    "ResourceLimitError",
    "SignedOrbitTerm",
    "TruncatedSeries",
    "TruncationError",
    "Weight",
    "cache_from_env",
    "coefficient_weight",
    "count_solutions",
    "dominant_representative",
    "dump_series",
    "enumerate_indices",
    "expand_generating_series",
    "from_ambient",
    "hilbert_series_prefix",
    "highest_weight_multiplicity",
    "index_count",
    "invariant_dimension",
    "invariant_dimension_by_series",
    "moment_shift",
    "moment_targets",
    "monomial_weight",
    "oracles",
    "signed_orbit_terms",
    "ternary_invariant_dimension",
    "to_ambient",
    "weight_multiplicity",
    "weyl_vector",
]
