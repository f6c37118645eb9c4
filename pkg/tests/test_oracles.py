import itertools
import math
import random
from collections import Counter

import pytest

from naryinv.errors import ResourceLimitError
from naryinv.oracles import (
    alternating_multiplicity_sum,
    binary_invariant_dimension,
    brute_character,
    freudenthal_multiplicity,
    strip_decompose,
    symmetric_power_dimension,
    weyl_dimension,
)
from naryinv.weights import from_ambient, to_ambient


def test_brute_character_examples():
    assert brute_character(2, 2, 2).multiplicities[(0,)] == 2
    for n, d in [(2, 2), (3, 3)]:
        assert brute_character(n, d, 0).multiplicities == {(0,) * (n - 1): 1}
    assert brute_character(2, 1, 2).multiplicities == {(2,): 1, (0,): 1, (-2,): 1}


def test_brute_character_total_mass():
    for n, d, k in [(2, 2, 4), (2, 4, 3), (3, 2, 3), (3, 3, 4)]:
        table = brute_character(n, d, k)
        assert table.total() == symmetric_power_dimension(n, d, k)


def test_brute_character_is_orbit_symmetric():
    table = brute_character(3, 2, 3).multiplicities
    for w, count in table.items():
        for perm in itertools.permutations(to_ambient(w)):
            assert table.get(from_ambient(perm), 0) == count


def test_brute_character_resource_limit():
    with pytest.raises(ResourceLimitError):
        brute_character(3, 3, 6, max_monomials=100)


def test_highest_weight_has_multiplicity_one():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 4)
        w = tuple(rng.randint(0, 4) for _ in range(n - 1))
        assert freudenthal_multiplicity(n, w, w) == 1


def test_freudenthal_known_multiplicities():
    assert freudenthal_multiplicity(3, (1, 1), (0, 0)) == 2
    assert freudenthal_multiplicity(2, (2,), (0,)) == 1
    assert freudenthal_multiplicity(2, (2,), (2,)) == 1
    assert freudenthal_multiplicity(2, (2,), (-2,)) == 1
    # outside the module
    assert freudenthal_multiplicity(2, (2,), (1,)) == 0
    assert freudenthal_multiplicity(2, (2,), (4,)) == 0
    assert freudenthal_multiplicity(3, (1, 1), (3, 0)) == 0


def test_freudenthal_is_orbit_symmetric():
    assert freudenthal_multiplicity(3, (2, 2), (2, -1)) == freudenthal_multiplicity(
        3, (2, 2), (1, 1)
    )


def _orbit_size(ambient):
    size = math.factorial(len(ambient))
    for rep in Counter(ambient).values():
        size //= math.factorial(rep)
    return size


def test_freudenthal_multiplicities_sum_to_weyl_dimension():
    rng = random.Random(17)
    samples = [(2, (6,)), (3, (2, 2)), (3, (3, 1)), (4, (1, 0, 1)), (4, (2, 1, 2))]
    samples += [
        (n, tuple(rng.randint(0, 3) for _ in range(n - 1)))
        for n in (2, 3, 4)
        for _ in range(3)
    ]
    for n, top in samples:
        # walk every weight in the module via dominant representatives
        total = 0
        top_ambient = sorted(to_ambient(top), reverse=True)
        rank_sum = sum(top_ambient)
        bound = top_ambient[0]
        for ambient in itertools.product(range(bound + 1), repeat=n):
            if sum(ambient) != rank_sum:
                continue
            if list(ambient) != sorted(ambient, reverse=True):
                continue
            mult = freudenthal_multiplicity(n, top, from_ambient(sorted(ambient)))
            total += mult * _orbit_size(ambient)
        assert total == weyl_dimension(n, top)


def test_weyl_dimension_examples():
    for n in (2, 3, 4):
        assert weyl_dimension(n, (0,) * (n - 1)) == 1
    assert weyl_dimension(3, (1, 1)) == 8
    for d in range(7):
        assert weyl_dimension(2, (d,)) == d + 1
    assert weyl_dimension(4, (1, 0, 1)) == 15


def test_alternating_sum_detects_the_zero_weight():
    assert alternating_multiplicity_sum(3, (0, 0)) == 1
    assert alternating_multiplicity_sum(3, (1, 1)) == 0
    assert alternating_multiplicity_sum(2, (4,)) == 0
    assert alternating_multiplicity_sum(2, (0,)) == 1
    assert alternating_multiplicity_sum(4, (0, 0, 0)) == 1
    assert alternating_multiplicity_sum(4, (2, 0, 1)) == 0


def test_strip_decompose_examples():
    assert strip_decompose(brute_character(2, 2, 2)) == {(4,): 1, (0,): 1}
    assert strip_decompose(brute_character(3, 2, 0)) == {(0, 0): 1}
    assert strip_decompose(brute_character(3, 3, 4)).get((0, 0), 0) == 1


def test_strip_decompose_dimension_bookkeeping():
    for n, d, k in [(2, 3, 4), (3, 2, 3), (3, 3, 3)]:
        table = brute_character(n, d, k)
        stripped = strip_decompose(table)
        assert all(v > 0 for v in stripped.values())
        total = sum(v * weyl_dimension(n, w) for w, v in stripped.items())
        assert total == table.total()


def test_binary_invariant_dimension_examples():
    assert binary_invariant_dimension(3, 4) == 1
    assert binary_invariant_dimension(4, 5) == 1
    for d in range(1, 7):
        assert binary_invariant_dimension(d, 0) == 1
    assert binary_invariant_dimension(3, 1) == 0  # odd product


def test_binary_oracles_agree_with_each_other():
    for d in range(1, 7):
        for k in range(11):
            stripped = strip_decompose(brute_character(2, d, k))
            assert stripped.get((0,), 0) == binary_invariant_dimension(d, k)
