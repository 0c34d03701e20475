"""Circular streets with row-restricted preferences.

A circular street of g*s spots is organized into s rows of g spots; cars
may only prefer the first spot of a row (spots 1, g+1, ..., g(s-1)+1) and
roll clockwise, wrapping around, until they find an empty spot.  With at
most as many cars as spots everyone parks, and the empty spots always end
immediately before a row start, so the occupancy decomposes into blocks of
whole rows.  Classifying all preference lists by that decomposition yields
the counting relation checked by :func:`verify_relation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from ._backend import kernels
from ._kernels_py import canonical_class, class_from_mask
from .brute import count_restricted
from .exceptions import BadModularPreference, BudgetExceeded, DomainError
from .formulas import compositions, multinomial


def preferred_spots(g: int, s: int) -> tuple:
    """The s row-start spots 1, g+1, ..., g(s-1)+1."""
    if g < 1 or s < 1:
        raise DomainError(f"need g, s >= 1, got g={g}, s={s}")
    return tuple(1 + j * g for j in range(s))


@dataclass(frozen=True)
class CircularState:
    """Occupancy of a circular street after all cars have parked."""

    g: int
    s: int
    prefs: tuple
    occupancy: tuple  # spot -> 1-based car index or None, length g*s

    @property
    def spots(self) -> int:
        return self.g * self.s

    @property
    def empty_spots(self) -> tuple:
        """1-based indices of the unoccupied spots."""
        return tuple(i + 1 for i, car in enumerate(self.occupancy) if car is None)

    @property
    def empty_count(self) -> int:
        return len(self.empty_spots)


def circular_park(prefs: Sequence[int], g: int, s: int) -> CircularState:
    """Park ``prefs`` on the circular street; every car parks."""
    spots = set(preferred_spots(g, s))
    length = g * s
    if len(prefs) > length:
        raise DomainError(f"{len(prefs)} cars exceed {length} spots")
    for car, p in enumerate(prefs, 1):
        if p not in spots:
            raise BadModularPreference(
                f"car {car} prefers spot {p}, not a row start of g={g}, s={s}"
            )
    occupancy = [None] * length
    for car, p in enumerate(prefs, 1):
        t = p - 1
        while occupancy[t] is not None:
            t = (t + 1) % length
        occupancy[t] = car
    return CircularState(g, s, tuple(prefs), tuple(occupancy))


class Decomposition(NamedTuple):
    lam: tuple  # gap sizes in cyclic order from the anchor
    mu: tuple   # row counts of the (filled run + gap) blocks
    anchor: int  # 1-based spot where the first block starts


def _empty_mask(state: CircularState) -> int:
    mask = 0
    for i, car in enumerate(state.occupancy):
        if car is None:
            mask |= 1 << i
    return mask


def decompose(state: CircularState) -> Decomposition:
    """Split the circle into (filled run, gap) blocks.

    Blocks are read clockwise from the anchor: the smallest-indexed
    occupied spot directly following a gap.  Gap sizes sum to the number
    of empty spots, block row counts sum to s.  Requires at least one
    empty spot.
    """
    if state.empty_count == 0:
        raise DomainError("no empty spots: nothing to decompose")
    lam, mu, anchor = class_from_mask(_empty_mask(state), state.spots, state.g)
    return Decomposition(lam, mu, anchor + 1)


def linearize(state: CircularState):
    """Cut the circle into a straight street, if the gap allows it.

    When the empty spots form one contiguous run, rotating the street so
    that run sits at the end turns the preferences into a parking function
    of length spots - gap over the row starts; the rotated list is
    returned.  With several gaps (or none) there is no such cut and None
    is returned.  A street with no cars linearizes to the empty list.
    """
    if not state.prefs:
        return ()
    if state.empty_count == 0:
        return None
    parts = decompose(state)
    if len(parts.lam) != 1:
        return None
    anchor = parts.anchor
    length = state.spots
    return tuple((p - anchor) % length + 1 for p in state.prefs)


@dataclass(frozen=True)
class ClassRow:
    """Observed vs. expected tally for one decomposition class."""

    lam: tuple
    mu: tuple
    observed: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.observed == self.expected


@dataclass(frozen=True)
class RelationReport:
    """Per-class verification of the circular counting relation."""

    g: int
    s: int
    k: int
    total: int  # s**(g*s - k), the number of classified lists
    rows: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return (
            all(row.ok for row in self.rows)
            and sum(row.observed for row in self.rows) == self.total
            and sum(row.expected for row in self.rows) == self.total
        )


def _period(pairs: tuple) -> int:
    n = len(pairs)
    for p in range(1, n + 1):
        if n % p == 0 and pairs[p:] + pairs[:p] == pairs:
            return p
    return n


def verify_relation(g: int, s: int, k: int, budget: int = 10**7) -> RelationReport:
    """Exhaustively check the circular counting relation for (g, s, k).

    Every one of the s**(g*s-k) circular preference lists is classified by
    its gap decomposition (up to rotation).  For each class the observed
    tally is compared with the predicted one,

        (p*s/n) * multinomial(g*s-k; g*mu - lam) * prod_i N(g*mu_i - lam_i),

    where p is the primitive period of the class (the number of distinct
    layouts is p*s/n) and the per-segment counts N come from the
    brute-force oracle, so the check is independent of the closed-form
    recursion.  Summed over classes this is exactly the relation.
    """
    length = g * s
    if g < 1 or s < 1 or not 1 <= k <= length - 1:
        raise DomainError(
            f"need g, s >= 1 and 1 <= k < g*s, got g={g}, s={s}, k={k}"
        )
    m = length - k
    total = s**m
    if total > budget:
        raise BudgetExceeded(f"{total} lists exceed budget {budget}")
    observed = kernels.modular_census(g, s, k)

    spots = preferred_spots(g, s)
    segment_cache: dict = {}

    def segment_count(seg_len: int) -> int:
        cached = segment_cache.get(seg_len)
        if cached is None:
            allowed = tuple(v for v in spots if v <= seg_len)
            cached = count_restricted(seg_len, allowed)
            segment_cache[seg_len] = cached
        return cached

    expected: dict = {}
    for n in range(1, min(k, s) + 1):
        for lam in compositions(k, n):
            for mu in compositions(s, n):
                parts = tuple(g * b - a for a, b in zip(lam, mu))
                if any(p <= 0 for p in parts):
                    continue
                key = canonical_class(lam, mu)
                if key in expected:
                    continue
                pairs = tuple(zip(*key))
                p = _period(pairs)
                layouts = Fraction(p * s, n)
                if layouts.denominator != 1:
                    raise AssertionError(
                        f"non-integer layout count for class {key}"
                    )
                value = int(layouts) * multinomial(m, parts)
                for seg in parts:
                    value *= segment_count(seg)
                expected[key] = value

    keys = sorted(set(observed) | set(expected))
    rows = tuple(
        ClassRow(lam, mu, observed.get((lam, mu), 0), expected.get((lam, mu), 0))
        for lam, mu in keys
    )
    return RelationReport(g, s, k, total, rows)
