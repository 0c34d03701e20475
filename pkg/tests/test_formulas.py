from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from parkres import brute, formulas
from parkres.exceptions import DomainError
from parkres.polynomial import X, IntPolynomial


def test_totals():
    assert formulas.pf_total(3) == 16
    assert [formulas.pf_total(n) for n in range(1, 7)] == [1, 3, 16, 125, 1296, 16807]
    assert formulas.ppf_total(4) == 27
    assert formulas.ppf_total(1) == 1
    with pytest.raises(DomainError):
        formulas.pf_total(0)


def test_restricted_subtractive_values():
    assert formulas.restricted_subtractive(5, 2) == 31
    assert formulas.restricted_subtractive(5, 3) == 206
    for n in range(1, 8):
        assert formulas.restricted_subtractive(n, 1) == 1
    with pytest.raises(DomainError):
        formulas.restricted_subtractive(3, 4)
    with pytest.raises(DomainError):
        formulas.restricted_subtractive(3, 0)


def test_restricted_forms_agree():
    for n in range(1, 13):
        for s in range(1, n + 1):
            assert formulas.restricted_alternating(n, s) == formulas.restricted_subtractive(n, s)


def test_restricted_full_street_collapses_to_total():
    for n in range(1, 10):
        assert formulas.restricted_alternating(n, n) == formulas.pf_total(n)


def test_restricted_matches_brute_force():
    for n in range(1, 7):
        for s in range(1, n + 1):
            assert formulas.restricted_subtractive(n, s) == brute.count_restricted(
                n, range(1, s + 1)
            )


def test_prime_forms():
    for n in range(2, 8):
        assert formulas.prime_subtractive(n, 1) == 1
    assert formulas.prime_subtractive(4, 2) == 11
    assert formulas.prime_subtractive(5, 4) == 256
    for n in range(2, 13):
        for s in range(1, n):
            assert formulas.prime_alternating(n, s) == formulas.prime_subtractive(n, s)
    for n in range(2, 7):
        for s in range(1, n):
            assert formulas.prime_subtractive(n, s) == brute.count_prime_restricted(
                n, range(1, s + 1)
            )
    with pytest.raises(DomainError):
        formulas.prime_subtractive(4, 4)


def test_catalan_triangle():
    for n in range(1, 10):
        assert formulas.catalan_triangle(n, 0) == 1
    assert [formulas.catalan_number(n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert formulas.catalan_triangle(2, 1) == 2
    rows = [[formulas.catalan_triangle(n, k) for k in range(n)] for n in range(1, 6)]
    assert rows == [[1], [1, 2], [1, 3, 5], [1, 4, 9, 14], [1, 5, 14, 28, 42]]
    # interior recurrence
    for n in range(2, 9):
        for k in range(1, n - 1):
            assert formulas.catalan_triangle(n, k) == formulas.catalan_triangle(
                n - 1, k
            ) + formulas.catalan_triangle(n, k - 1)
    with pytest.raises(DomainError):
        formulas.catalan_triangle(3, 3)
    with pytest.raises(DomainError):
        formulas.catalan_triangle(3, -1)


def test_catalan_triangle_matches_orbit_counts():
    for n in range(1, 9):
        for s in range(1, n + 1):
            assert formulas.catalan_triangle(n, s - 1) == brute.count_nondecreasing_restricted(n, s)


def test_ones_polynomials():
    assert formulas.ones_poly_subtractive(1, 1) == X
    assert formulas.ones_poly_alternating(1, 1) == X
    assert formulas.ones_poly_subtractive(2, 2) == IntPolynomial((0, 2, 1))
    for n in range(1, 9):
        for s in range(1, n + 1):
            a = formulas.ones_poly_subtractive(n, s)
            b = formulas.ones_poly_alternating(n, s)
            assert a == b
            assert a.coefficient(0) == 0
        assert formulas.ones_poly_subtractive(n, n) == X * (X + n) ** (n - 1)


def test_ones_polynomials_match_distribution():
    for n in range(1, 7):
        for s in range(1, n + 1):
            poly = formulas.ones_poly_subtractive(n, s)
            dist = brute.ones_distribution(n, s)
            assert tuple(poly.coefficient(i) for i in range(1, n + 1)) == dist
            assert poly(1) == brute.count_restricted(n, range(1, s + 1))


def test_abel_check():
    for x in (-2, 0, 3, Fraction(1, 2)):
        for y in (-1, 0, 2, Fraction(-1, 2)):
            res = formulas.abel_check(1, x, y)
            assert res.equal and res.lhs == x + y + 1
    grid = [Fraction(v) for v in range(-3, 4)] + [Fraction(1, 2), Fraction(-1, 2)]
    for n in range(1, 7):
        for x in grid:
            for y in grid:
                assert formulas.abel_check(n, x, y).equal
    # both specializations evaluate to s**n
    plus = formulas.abel_check(4, 1, 2 - 4 - 1)
    assert plus.equal and plus.lhs == 16
    minus = formulas.abel_check(4, -1, 2 - 4 + 1)
    assert minus.equal and minus.lhs == 16


def test_max_run_length():
    assert formulas.max_run_length((1, 2), 2) == 2
    assert formulas.max_run_length((2, 1), 2) == 1
    for n in range(1, 6):
        identity = tuple(range(1, n + 1))
        for i in range(1, n + 1):
            assert formulas.max_run_length(identity, i) == i
    assert formulas.max_run_length((3, 1, 2, 5, 4), 5) == 1
    assert formulas.max_run_length((3, 1, 2, 5, 4), 4) == 4
    assert formulas.max_run_length((3, 1, 2, 5, 4), 3) == 2
    with pytest.raises(DomainError):
        formulas.max_run_length((1, 1), 1)


def test_fiber_size_formula():
    assert formulas.fiber_size_formula((1, 2), 2) == 2
    assert formulas.fiber_size_formula((2, 1), 1) == 0
    for n in range(1, 6):
        identity = tuple(range(1, n + 1))
        assert formulas.fiber_size_formula(identity, n) == factorial(n)
    for n in range(1, 5):
        for s in range(1, n + 1):
            for sigma in permutations(range(1, n + 1)):
                assert formulas.fiber_size_formula(sigma, s) == brute.fiber_size_bruteforce(sigma, s)


def test_compositions():
    assert list(formulas.compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(formulas.compositions(4, 1)) == [(4,)]
    listing = list(formulas.compositions(6, 3))
    assert listing == sorted(listing)
    assert len(listing) == comb(5, 2)
    assert all(sum(c) == 6 and min(c) >= 1 for c in listing)
    with pytest.raises(DomainError):
        formulas.compositions(2, 3)
    with pytest.raises(DomainError):
        formulas.compositions(2, 0)


def test_multinomial():
    assert formulas.multinomial(4, (2, 2)) == 6
    assert formulas.multinomial(7, (5, 2)) == 21
    assert formulas.multinomial(5, (5,)) == 1
    assert formulas.multinomial(3, (1, 0, 2)) == 3
    with pytest.raises(DomainError):
        formulas.multinomial(3, (4, -1))
    with pytest.raises(DomainError):
        formulas.multinomial(3, (1, 1))


def test_mod_count_k1():
    assert formulas.mod_count_k1(3, 3) == 2187
    assert formulas.mod_count_k1(2, 2) == 4
    for s in range(2, 9):
        assert formulas.mod_count_k1(1, s) == formulas.pf_total(s - 1)
    with pytest.raises(DomainError):
        formulas.mod_count_k1(1, 1)


def test_mod_count():
    for g, s in ((1, 4), (2, 2), (2, 3), (3, 2), (3, 3)):
        assert formulas.mod_count(g, s, 1) == formulas.mod_count_k1(g, s)
    # row size 1 collapses to the classical count
    for s in range(2, 9):
        for k in range(1, s):
            assert formulas.mod_count(1, s, k) == formulas.pf_total(s - k)
    assert formulas.mod_count(3, 3, 2) == 393
    assert formulas.mod_count(3, 3, 9) == 1  # zero cars: the empty list
    with pytest.raises(DomainError):
        formulas.mod_count(3, 3, 10)
    with pytest.raises(DomainError):
        formulas.mod_count(0, 3, 1)


def test_mod_count_matches_brute_force():
    from parkres.circular import preferred_spots

    for g in range(1, 4):
        for s in range(1, 4):
            for k in range(1, g * s):
                m = g * s - k
                if s**m > 10**5:
                    continue
                allowed = [v for v in preferred_spots(g, s) if v <= m]
                assert formulas.mod_count(g, s, k) == brute.count_restricted(m, allowed)
