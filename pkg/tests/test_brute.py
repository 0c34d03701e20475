from itertools import combinations, combinations_with_replacement, permutations, product

import pytest

from parkres import brute, core
from parkres.exceptions import DomainError, EmptyRestriction


def all_subsets(n):
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def test_enum_restricted_examples():
    assert list(brute.enum_restricted(2, (1, 2))) == [(1, 1), (1, 2), (2, 1)]
    assert list(brute.enum_restricted(2, (1,))) == [(1, 1)]
    assert list(brute.enum_restricted(2, (2,))) == []
    assert list(brute.enum_restricted(0, (1,))) == [()]


def test_enum_restricted_empty_set():
    with pytest.raises(EmptyRestriction):
        list(brute.enum_restricted(2, ()))
    assert list(brute.enum_restricted(0, ())) == [()]


def test_enum_restricted_rejects_bad_set():
    with pytest.raises(DomainError):
        list(brute.enum_restricted(2, (1, 5)))


def test_enum_matches_filtered_product():
    for n in range(1, 5):
        for S in all_subsets(n):
            expected = [
                prefs
                for prefs in product(S, repeat=n)
                if core.is_parking_function(prefs)
            ]
            got = list(brute.enum_restricted(n, S))
            assert got == expected  # lexicographic and duplicate-free
            assert brute.count_restricted(n, S) == len(expected)


def test_enum_prime_matches_filtered_product():
    for n in range(1, 5):
        for S in all_subsets(n):
            expected = [
                prefs for prefs in product(S, repeat=n) if core.is_prime(prefs)
            ]
            assert list(brute.enum_prime_restricted(n, S)) == expected
            assert brute.count_prime_restricted(n, S) == len(expected)


def test_enum_output_is_sorted_and_unique():
    listing = list(brute.enum_restricted(5, (1, 2, 4)))
    assert listing == sorted(set(listing))


def test_count_restricted_spot_values():
    assert brute.count_restricted(5, (1, 2)) == 31
    assert brute.count_restricted(5, (1, 2, 3)) == 206
    assert brute.count_restricted(3, (1, 2, 3)) == 16
    assert brute.count_restricted(7, (1, 4, 7)) == 393


def test_count_prime_restricted_values():
    assert brute.count_prime_restricted(4, (1, 2, 3, 4)) == 27
    assert brute.count_prime_restricted(3, (1,)) == 1
    # avoiding spot 2: only the all-ones list survives the strict condition
    assert brute.count_prime_restricted(3, (1, 3)) == 1
    assert list(brute.enum_prime_restricted(2, (1, 2))) == [(1, 1)]
    assert brute.count_prime_restricted(2, ()) == 0


def test_count_nondecreasing_restricted():
    assert brute.count_nondecreasing_restricted(2, 2) == 2
    for n in range(1, 7):
        assert brute.count_nondecreasing_restricted(n, 1) == 1
    # diagonal: Catalan numbers
    assert [brute.count_nondecreasing_restricted(n, n) for n in range(1, 7)] == [
        1,
        2,
        5,
        14,
        42,
        132,
    ]
    for n in range(1, 6):
        for s in range(1, n + 1):
            expected = sum(
                1
                for t in combinations_with_replacement(range(1, s + 1), n)
                if core.catalan_check(t)
            )
            assert brute.count_nondecreasing_restricted(n, s) == expected


def test_ones_distribution():
    assert brute.ones_distribution(2, 2) == (2, 1)
    assert brute.ones_distribution(1, 1) == (1,)
    assert brute.ones_distribution(3, 2) == (3, 3, 1)
    assert brute.ones_distribution(3, 3) == (9, 6, 1)
    for n in range(1, 6):
        for s in range(1, n + 1):
            dist = brute.ones_distribution(n, s)
            assert sum(dist) == brute.count_restricted(n, range(1, s + 1))


def test_fiber_size_bruteforce():
    assert brute.fiber_size_bruteforce((1, 2), 2) == 2
    assert brute.fiber_size_bruteforce((2, 1), 1) == 0
    assert brute.fiber_size_bruteforce((2, 1), 2) == 1
    with pytest.raises(DomainError):
        brute.fiber_size_bruteforce((1, 1), 1)
    for n in range(1, 5):
        for s in range(1, n + 1):
            total = sum(
                brute.fiber_size_bruteforce(sigma, s)
                for sigma in permutations(range(1, n + 1))
            )
            assert total == brute.count_restricted(n, range(1, s + 1))


def test_count_min_defect():
    assert brute.count_min_defect(2, 1) == 1
    assert brute.count_min_defect(3, 2) == 7
    assert brute.count_min_defect(5, 2) == 31
    for n in range(1, 6):
        for s in range(1, n + 1):
            assert brute.count_min_defect(n, s) == brute.count_restricted(
                n, range(1, s + 1)
            )


def test_defect_floor():
    # no function beats defect n - s; ties are exactly the restricted lists
    for n in range(1, 7):
        for s in range(1, n + 1):
            for prefs in product(range(1, s + 1), repeat=n):
                d = core.defect(prefs, s)
                assert d >= n - s
                assert (d == n - s) == core.catalan_check(prefs)
