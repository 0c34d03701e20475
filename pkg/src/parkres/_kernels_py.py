"""Pure-Python counting kernels.

Reference implementations of the hot loops; `parkres._kernels` is the
compiled twin with the same signatures and semantics.  Which one a process
uses is decided once, in `parkres._backend`.

All kernels enumerate preference lists with an odometer over the allowed
values in lexicographic order.  The parking-function counters prune a
prefix as soon as no completion can satisfy the occupancy condition
(with r entries still free, at least i - r of the placed entries must be
<= i, for every i); pruning only ever discards lists that provably fail,
so counts equal those of the unpruned enumeration.
"""

from __future__ import annotations

from .exceptions import NotBlockAligned


def count_parking(n: int, allowed: tuple, strict: bool = False) -> int:
    """Count lists over ``allowed``^n in which every car parks.

    With ``strict`` the count is of prime lists instead (more than i
    entries <= i for all i < n).  ``allowed`` must be sorted, within
    [1, n]; the empty list of length 0 counts once.
    """
    if n == 0:
        return 1
    if not allowed or allowed[0] != 1:
        return 0  # spot 1 is never preferred
    counts = [0] * (n + 1)

    def feasible(placed: int) -> bool:
        r = n - placed
        running = 0
        for i in range(1, n + 1):
            running += counts[i]
            need = i + 1 if (strict and i < n) else i
            if running + r < need:
                return False
            if running == placed:
                return True  # later needs are met even in the worst case
        return True

    total = 0

    def go(pos: int) -> None:
        nonlocal total
        last = pos + 1 == n
        for v in allowed:
            counts[v] += 1
            if feasible(pos + 1):
                if last:
                    total += 1
                else:
                    go(pos + 1)
            counts[v] -= 1

    go(0)
    return total


def ones_census(n: int, s: int) -> list:
    """Counts of [s]-restricted parking functions by number of 1 entries.

    Returns a list of length n + 1 indexed by how many cars prefer spot 1.
    """
    if n == 0:
        return [1]
    allowed = tuple(range(1, s + 1))
    counts = [0] * (n + 1)
    tally = [0] * (n + 1)

    def feasible(placed: int) -> bool:
        r = n - placed
        running = 0
        for i in range(1, n + 1):
            running += counts[i]
            if running + r < i:
                return False
            if running == placed:
                return True
        return True

    def go(pos: int) -> None:
        last = pos + 1 == n
        for v in allowed:
            counts[v] += 1
            if feasible(pos + 1):
                if last:
                    tally[counts[1]] += 1
                else:
                    go(pos + 1)
            counts[v] -= 1

    go(0)
    return tally


def count_min_defect(n: int, s: int) -> int:
    """Count functions [n] -> [s] that leave only n - s cars unparked.

    Decided by simulating the parking procedure for every list, so it is
    independent of the occupancy-condition counters above.
    """
    if n == 0:
        return 1
    digits = [1] * n
    occ = bytearray(s + 1)
    total = 0
    while True:
        for i in range(1, s + 1):
            occ[i] = 0
        parked = 0
        for p in digits:
            t = p
            while t <= s and occ[t]:
                t += 1
            if t <= s:
                occ[t] = 1
                parked += 1
        if parked == s:
            total += 1
        pos = n - 1
        while pos >= 0 and digits[pos] == s:
            digits[pos] = 1
            pos -= 1
        if pos < 0:
            return total
        digits[pos] += 1


def class_from_mask(mask: int, length: int, g: int):
    """Decompose a circular empty-spot pattern into (gap sizes, block sizes).

    ``mask`` has bit i set when 0-based spot i is empty.  Reading starts at
    the anchor: the smallest-indexed occupied spot that immediately follows
    an empty one.  Blocks pair each filled run with the gap after it; every
    block length must be divisible by ``g`` (rows of g spots), otherwise
    :class:`NotBlockAligned` is raised.

    Returns ``(lam, mu, anchor)`` with ``lam`` the gap sizes, ``mu`` the
    block lengths divided by g, and ``anchor`` the 0-based start spot.
    """
    if mask == 0:
        raise NotBlockAligned("no empty spots: nothing to decompose")
    if mask == (1 << length) - 1:  # no cars at all: one all-empty block
        if length % g:
            raise NotBlockAligned(f"empty circle of length {length} with row size {g}")
        return (length,), (length // g,), 0
    anchor = -1
    for b in range(length):
        if not (mask >> b) & 1 and (mask >> ((b - 1) % length)) & 1:
            anchor = b
            break
    # Both empty and occupied spots exist, so the anchor does too and every
    # run below terminates at a spot of the opposite kind.
    if anchor % g:
        raise NotBlockAligned(
            f"gap ends at spot {anchor} (0-based), not before a row start"
        )
    lam = []
    mu = []
    t = anchor
    consumed = 0
    while consumed < length:
        filled = 0
        while not (mask >> t) & 1:
            filled += 1
            t = (t + 1) % length
        gap = 0
        while (mask >> t) & 1:
            gap += 1
            t = (t + 1) % length
        block = filled + gap
        if block % g:
            raise NotBlockAligned(
                f"block of length {block} not divisible by row size {g}"
            )
        lam.append(gap)
        mu.append(block // g)
        consumed += block
    return tuple(lam), tuple(mu), anchor


def canonical_class(lam: tuple, mu: tuple) -> tuple:
    """Lexicographically minimal cyclic rotation of the paired sequence."""
    pairs = tuple(zip(lam, mu))
    n = len(pairs)
    best = min(pairs[r:] + pairs[:r] for r in range(n))
    return tuple(p[0] for p in best), tuple(p[1] for p in best)


def modular_census(g: int, s: int, k: int) -> dict:
    """Classify all circular preference lists by their gap decomposition.

    Simulates every list of ``g*s - k`` cars on a circular street of
    ``g*s`` spots, preferences limited to the first spot of each row, and
    tallies the resulting (gap sizes, block sizes) classes, canonicalized
    up to cyclic rotation.  Returns ``{(lam, mu): count}``.
    """
    length = g * s
    m = length - k
    patterns: dict = {}
    if m == 0:
        patterns[(1 << length) - 1] = 1
    else:
        spots = [d * g for d in range(s)]
        digits = [0] * m
        occ = bytearray(length)
        while True:
            for i in range(length):
                occ[i] = 0
            for d in digits:
                t = spots[d]
                while occ[t]:
                    t += 1
                    if t == length:
                        t = 0
                occ[t] = 1
            mask = 0
            for i in range(length - 1, -1, -1):
                mask = (mask << 1) | (0 if occ[i] else 1)
            patterns[mask] = patterns.get(mask, 0) + 1
            pos = m - 1
            while pos >= 0 and digits[pos] == s - 1:
                digits[pos] = 0
                pos -= 1
            if pos < 0:
                break
            digits[pos] += 1
    census: dict = {}
    for mask, cnt in patterns.items():
        lam, mu, _ = class_from_mask(mask, length, g)
        key = canonical_class(lam, mu)
        census[key] = census.get(key, 0) + cnt
    return census
