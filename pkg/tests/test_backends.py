"""The compiled kernels and the pure-Python fallback must agree exactly."""

from itertools import combinations

import pytest

from parkres import _kernels_py as kpy
from parkres.exceptions import NotBlockAligned

kc = pytest.importorskip("parkres._kernels")


def all_restrictions(n):
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def test_count_parking_agreement():
    for n in range(0, 7):
        if n == 0:
            assert kc.count_parking(0, (), False) == kpy.count_parking(0, (), False) == 1
            continue
        for allowed in all_restrictions(n):
            for strict in (False, True):
                assert kc.count_parking(n, allowed, strict) == kpy.count_parking(
                    n, allowed, strict
                )


def test_ones_census_agreement():
    for n in range(1, 7):
        for s in range(1, n + 1):
            assert kc.ones_census(n, s) == kpy.ones_census(n, s)


def test_count_min_defect_agreement():
    for n in range(1, 7):
        for s in range(1, n + 1):
            assert kc.count_min_defect(n, s) == kpy.count_min_defect(n, s)


def test_modular_census_agreement():
    cases = [(2, 2, 1), (2, 2, 2), (2, 3, 2), (3, 2, 4), (3, 3, 2), (1, 4, 2), (1, 5, 3), (4, 2, 3)]
    for g, s, k in cases:
        assert kc.modular_census(g, s, k) == kpy.modular_census(g, s, k)


def test_modular_census_zero_cars():
    assert kc.modular_census(2, 2, 4) == {((4,), (2,)): 1}
    assert kpy.modular_census(2, 2, 4) == {((4,), (2,)): 1}


def test_class_from_mask_alignment_guard():
    # an empty run that does not end right before a row start is impossible
    # for simulated states; the decomposer refuses it
    with pytest.raises(NotBlockAligned):
        kpy.class_from_mask(0b0100, 4, 2)
    with pytest.raises(NotBlockAligned):
        kpy.class_from_mask(0, 4, 2)
    assert kpy.class_from_mask(0b0010, 4, 2) == ((1,), (2,), 2)


def test_census_totals():
    for g, s, k in [(2, 3, 2), (3, 3, 1)]:
        census = kc.modular_census(g, s, k)
        assert sum(census.values()) == s ** (g * s - k)
