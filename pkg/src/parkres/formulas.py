"""Exact closed forms, recurrences and polynomial identities.

Each count that also has a brute-force oracle in :mod:`parkres.brute`
is computed here from a formula alone; agreement between the two routes is
enforced by the verification suites, never assumed.  All arithmetic is
exact (Python ints, :class:`fractions.Fraction`, :class:`IntPolynomial`).

Conventions used throughout, chosen so every identity holds verbatim:
0**0 == 1; the factor (i+1)**(i-1) at i == 0 is 1; the factor x*(x+i)**(i-1)
at i == 0 is the constant 1 (which also covers x == 0).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, NamedTuple, Sequence

from .exceptions import DomainError, NonIntegerIntermediate
from .polynomial import ONE, X, IntPolynomial


def pf_total(n: int) -> int:
    """Number of parking functions on n cars: (n+1)**(n-1)."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return (n + 1) ** (n - 1)


def ppf_total(n: int) -> int:
    """Number of prime parking functions on n cars: (n-1)**(n-1).

    For n == 1 this is 0**0 == 1, matching the single prime list (1,).
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return (n - 1) ** (n - 1)


def _check_ns(n: int, s: int) -> None:
    if not 1 <= s <= n:
        raise DomainError(f"need 1 <= s <= n, got s={s}, n={n}")


def restricted_subtractive(n: int, s: int) -> int:
    """Number of [s]-restricted parking functions on n cars:

        s**n - sum_{i=0}^{s-1} C(n,i) * (i+1)**(i-1) * (s-i-1)**(n-i)

    obtained by subtracting the non-parking lists, classified by the first
    unoccupied spot.
    """
    _check_ns(n, s)
    total = s**n
    for i in range(s):
        pf_i = 1 if i == 0 else (i + 1) ** (i - 1)
        total -= comb(n, i) * pf_i * (s - i - 1) ** (n - i)
    return total


def restricted_alternating(n: int, s: int) -> int:
    """The same count as :func:`restricted_subtractive` as an alternating sum:

        sum_{i=s}^{n} C(n,i) * (i+1)**(i-1) * (s-i-1)**(n-i)

    from the signed count of two-colored parking functions cancelled by the
    recoloring involution.  The two forms are asserted equal.
    """
    _check_ns(n, s)
    total = 0
    for i in range(s, n + 1):
        total += comb(n, i) * (i + 1) ** (i - 1) * (s - i - 1) ** (n - i)
    assert total == restricted_subtractive(n, s)
    return total


def prime_subtractive(n: int, s: int) -> int:
    """Number of [s]-restricted prime parking functions on n cars (s < n):

        s**n - (s-1)**n - sum_{i=1}^{s} C(n,i) * (i-1)**(i-1) * (s-i)**(n-i)

    subtracting the non-prime lists by the position of the first failure
    of the strict occupancy condition.
    """
    if not 1 <= s < n:
        raise DomainError(f"need 1 <= s < n, got s={s}, n={n}")
    total = s**n - (s - 1) ** n
    for i in range(1, s + 1):
        total -= comb(n, i) * (i - 1) ** (i - 1) * (s - i) ** (n - i)
    return total


def prime_alternating(n: int, s: int) -> int:
    """The prime count as an alternating sum:

        sum_{i=s+1}^{n} C(n,i) * (i-1)**(i-1) * (s-i)**(n-i)

    Asserted equal to :func:`prime_subtractive`.
    """
    if not 1 <= s < n:
        raise DomainError(f"need 1 <= s < n, got s={s}, n={n}")
    total = 0
    for i in range(s + 1, n + 1):
        total += comb(n, i) * (i - 1) ** (i - 1) * (s - i) ** (n - i)
    assert total == prime_subtractive(n, s)
    return total


@lru_cache(maxsize=None)
def _catalan_row(n: int) -> tuple:
    if n == 1:
        return (1,)
    prev = _catalan_row(n - 1)
    row = [1]
    for k in range(1, n):
        up = prev[k] if k <= n - 2 else prev[n - 2]
        row.append(row[k - 1] + up)
    return tuple(row)


def catalan_triangle(n: int, k: int) -> int:
    """Entry (n, k) of the Catalan triangle, 0 <= k <= n-1.

    First column 1, diagonal the Catalan numbers, and inner entries
    satisfying T(n, k) = T(n-1, k) + T(n, k-1).  Row n lists the orbit
    counts of [s]-restricted parking functions for s = k+1.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise DomainError(f"triangle entry ({n}, {k}) out of range")
    return _catalan_row(n)[k]


def catalan_number(n: int) -> int:
    """The n-th Catalan number (diagonal of the triangle)."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return catalan_triangle(n, n - 1)


def _ones_factor(i: int) -> IntPolynomial:
    # x*(x+i)**(i-1), which counts parking functions of length i by their
    # number of 1 entries; the empty product at i == 0 is 1.
    if i == 0:
        return ONE
    return X * (X + i) ** (i - 1)


def ones_poly_subtractive(n: int, s: int) -> IntPolynomial:
    """Generating polynomial of [s]-restricted parking functions by the
    number of cars preferring spot 1:

        (s-1+x)**n - sum_{i=0}^{s-1} C(n,i) * x(x+i)**(i-1) * (s-i-1)**(n-i)
    """
    _check_ns(n, s)
    total = (X + (s - 1)) ** n
    for i in range(s):
        total = total - comb(n, i) * _ones_factor(i) * (s - i - 1) ** (n - i)
    return total


def ones_poly_alternating(n: int, s: int) -> IntPolynomial:
    """The same enumerator as an alternating sum:

        sum_{i=s}^{n} C(n,i) * x(x+i)**(i-1) * (s-i-1)**(n-i)

    Asserted equal to :func:`ones_poly_subtractive`.
    """
    _check_ns(n, s)
    total = IntPolynomial()
    for i in range(s, n + 1):
        total = total + comb(n, i) * _ones_factor(i) * (s - i - 1) ** (n - i)
    assert total == ones_poly_subtractive(n, s)
    return total


class AbelCheck(NamedTuple):
    equal: bool
    lhs: Fraction
    rhs: Fraction


def abel_check(n: int, x, y) -> AbelCheck:
    """Evaluate both sides of Abel's binomial identity at exact rationals:

        (x + y + n)**n == sum_{i=0}^{n} C(n,i) * x(x+i)**(i-1) * (y+n-i)**(n-i)

    The i == 0 factor x*(x+0)**(-1) is taken to be 1, which removes the
    singularity at x == 0.  Returns the equality flag and both values.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    x = Fraction(x)
    y = Fraction(y)
    lhs = (x + y + n) ** n
    rhs = Fraction(0)
    for i in range(n + 1):
        factor = Fraction(1) if i == 0 else x * (x + i) ** (i - 1)
        rhs += comb(n, i) * factor * (y + n - i) ** (n - i)
    return AbelCheck(lhs == rhs, lhs, rhs)


def _check_permutation(sigma: Sequence[int]) -> int:
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DomainError(f"{tuple(sigma)} is not a permutation of 1..{n}")
    return n


def max_run_length(sigma: Sequence[int], i: int) -> int:
    """Length of the longest contiguous window of ``sigma`` ending at
    position ``i`` (1-based) whose maximum is ``sigma[i-1]``."""
    n = _check_permutation(sigma)
    if not 1 <= i <= n:
        raise DomainError(f"position {i} outside 1..{n}")
    top = sigma[i - 1]
    length = 0
    for j in range(i - 1, -1, -1):
        if sigma[j] > top:
            break
        length += 1
    return length


def fiber_size_formula(sigma: Sequence[int], s: int) -> int:
    """Number of [s]-restricted parking functions with parking outcome
    ``sigma``:

        prod_{i=1}^{n} max(0, run_i - max(0, i - s))

    where run_i is :func:`max_run_length`.  Car sigma_i parked in spot i
    may have preferred any spot of the longest window ending at i that it
    dominates, minus the spots beyond s.
    """
    n = _check_permutation(sigma)
    if not 1 <= s <= n:
        raise DomainError(f"need 1 <= s <= n, got s={s}, n={n}")
    total = 1
    for i in range(1, n + 1):
        choices = max_run_length(sigma, i) - max(0, i - s)
        if choices <= 0:
            return 0
        total *= choices
    return total


def compositions(total: int, num_parts: int) -> Iterator[tuple]:
    """All compositions of ``total`` into exactly ``num_parts`` positive
    parts, in lexicographic order."""
    if num_parts < 1 or total < num_parts:
        raise DomainError(
            f"cannot compose {total} into {num_parts} positive parts"
        )

    def go(remaining: int, parts: int):
        if parts == 1:
            yield (remaining,)
            return
        for first in range(1, remaining - parts + 2):
            for rest in go(remaining - first, parts - 1):
                yield (first,) + rest

    return go(total, num_parts)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Number of ways to split n labelled items into blocks of the given
    sizes.  Parts must be nonnegative and sum to n."""
    if any(p < 0 for p in parts):
        raise DomainError(f"negative part in {tuple(parts)}")
    if sum(parts) != n:
        raise DomainError(f"parts {tuple(parts)} do not sum to {n}")
    result = factorial(n)
    for p in parts:
        result //= factorial(p)
    return result


def mod_count_k1(g: int, s: int) -> int:
    """Number of parking functions of length g*s - 1 whose preferences are
    limited to the first spot of each of s rows of g spots: s**(g*s - 2)."""
    if g < 1 or s < 1 or g * s < 2:
        raise DomainError(f"need g, s >= 1 and g*s >= 2, got g={g}, s={s}")
    return s ** (g * s - 2)


_MOD_MEMO: dict = {}


def mod_count(g: int, s: int, k: int) -> int:
    """Number of parking functions of length g*s - k with preferences
    limited to the spots that are 1 mod g.

    Solves the circular-street relation

        s**(g*s-k) = s*N(g*s-k)
                   + sum_{n=2}^{k} (s/n) * sum_{lam, mu} multinomial(g*s-k; g*mu - lam)
                                            * prod_i N(g*mu_i - lam_i)

    for N(g*s-k), where lam runs over compositions of k and mu over
    compositions of s, both of length n, and the product recurses on the
    per-segment counts.  Composition pairs in which some segment would
    hold g*mu_i - lam_i <= 0 cars cannot arise from maximal empty runs and
    are skipped.  A length of 0 (k == g*s) counts as 1, the empty list.

    The s/n weights are computed over exact rationals; failure to cancel
    raises :class:`NonIntegerIntermediate` (it would indicate a bug, the
    result is provably an integer).
    """
    if g < 1 or s < 1 or not 1 <= k <= g * s:
        raise DomainError(f"need g, s >= 1 and 1 <= k <= g*s, got {g}, {s}, {k}")
    return _mod_count(g, s, k)


def _mod_count(g: int, s: int, k: int) -> int:
    m = g * s - k
    if m == 0:
        return 1
    cached = _MOD_MEMO.get((g, m))
    if cached is not None:
        return cached
    acc = Fraction(0)
    for n in range(2, min(k, s) + 1):
        sub = 0
        for lam in compositions(k, n):
            for mu in compositions(s, n):
                parts = [g * b - a for a, b in zip(lam, mu)]
                if any(p <= 0 for p in parts):
                    continue
                weight = multinomial(m, parts)
                for a, b in zip(lam, mu):
                    weight *= _mod_count(g, b, a)
                sub += weight
        acc += Fraction(s, n) * sub
    if acc.denominator != 1:
        raise NonIntegerIntermediate(
            f"cyclic weights left denominator {acc.denominator} at g={g}, s={s}, k={k}"
        )
    remainder = s**m - int(acc)
    if remainder % s:
        raise NonIntegerIntermediate(
            f"total not divisible by s={s} at g={g}, s={s}, k={k}"
        )
    value = remainder // s
    if value < 0:
        raise NonIntegerIntermediate(f"negative count at g={g}, s={s}, k={k}")
    _MOD_MEMO[(g, m)] = value
    return value
