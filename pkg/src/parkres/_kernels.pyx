# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

Same signatures and semantics as `parkres._kernels_py`; that module is the
readable reference.  The odometer/pruning logic is duplicated here at C
level, while the circular pattern classification is delegated back to the
Python helpers (it runs once per distinct empty-spot pattern, not per
list, so it is not hot).
"""

from libc.stdlib cimport calloc, free

from parkres._kernels_py import canonical_class, class_from_mask


cdef struct SearchState:
    int n
    int kk           # number of allowed values
    int strict
    int *allowed
    int *counts      # counts[v] = placed entries equal to v
    long long total


cdef inline bint _feasible(SearchState *st, int placed) nogil:
    cdef int r = st.n - placed
    cdef int running = 0
    cdef int i, need
    for i in range(1, st.n + 1):
        running += st.counts[i]
        need = i + 1 if (st.strict and i < st.n) else i
        if running + r < need:
            return False
        if running == placed:
            return True
    return True


cdef void _count_dfs(SearchState *st, int pos) nogil:
    cdef int j, v
    cdef bint last = pos + 1 == st.n
    for j in range(st.kk):
        v = st.allowed[j]
        st.counts[v] += 1
        if _feasible(st, pos + 1):
            if last:
                st.total += 1
            else:
                _count_dfs(st, pos + 1)
        st.counts[v] -= 1


def count_parking(int n, tuple allowed, bint strict=False):
    """Count lists over ``allowed``^n in which every car parks; with
    ``strict``, count prime lists instead."""
    if n == 0:
        return 1
    cdef int kk = len(allowed)
    if kk == 0 or allowed[0] != 1:
        return 0
    cdef SearchState st
    st.n = n
    st.kk = kk
    st.strict = 1 if strict else 0
    st.allowed = <int *> calloc(kk, sizeof(int))
    st.counts = <int *> calloc(n + 1, sizeof(int))
    if st.allowed == NULL or st.counts == NULL:
        free(st.allowed)
        free(st.counts)
        raise MemoryError()
    cdef int j
    for j in range(kk):
        st.allowed[j] = allowed[j]
    st.total = 0
    try:
        with nogil:
            _count_dfs(&st, 0)
        return st.total
    finally:
        free(st.allowed)
        free(st.counts)


cdef void _ones_dfs(SearchState *st, int pos, long long *tally) nogil:
    cdef int j, v
    cdef bint last = pos + 1 == st.n
    for j in range(st.kk):
        v = st.allowed[j]
        st.counts[v] += 1
        if _feasible(st, pos + 1):
            if last:
                tally[st.counts[1]] += 1
            else:
                _ones_dfs(st, pos + 1, tally)
        st.counts[v] -= 1


def ones_census(int n, int s):
    """Counts of [s]-restricted parking functions by number of 1 entries."""
    if n == 0:
        return [1]
    cdef SearchState st
    st.n = n
    st.kk = s
    st.strict = 0
    st.allowed = <int *> calloc(s, sizeof(int))
    st.counts = <int *> calloc(n + 1, sizeof(int))
    cdef long long *tally = <long long *> calloc(n + 1, sizeof(long long))
    if st.allowed == NULL or st.counts == NULL or tally == NULL:
        free(st.allowed)
        free(st.counts)
        free(tally)
        raise MemoryError()
    cdef int j
    for j in range(s):
        st.allowed[j] = j + 1
    try:
        with nogil:
            _ones_dfs(&st, 0, tally)
        return [tally[j] for j in range(n + 1)]
    finally:
        free(st.allowed)
        free(st.counts)
        free(tally)


def count_min_defect(int n, int s):
    """Count functions [n] -> [s] that leave only n - s cars unparked,
    decided by simulating the parking procedure for every list."""
    if n == 0:
        return 1
    cdef int *digits = <int *> calloc(n, sizeof(int))
    cdef char *occ = <char *> calloc(s + 2, sizeof(char))
    if digits == NULL or occ == NULL:
        free(digits)
        free(occ)
        raise MemoryError()
    cdef long long total = 0
    cdef int i, t, parked, pos
    cdef bint more = True
    try:
        with nogil:
            for i in range(n):
                digits[i] = 1
            while more:
                for i in range(1, s + 1):
                    occ[i] = 0
                parked = 0
                for i in range(n):
                    t = digits[i]
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
                    more = False
                else:
                    digits[pos] += 1
        return total
    finally:
        free(digits)
        free(occ)


def modular_census(int g, int s, int k):
    """Classify all circular preference lists by gap decomposition.

    See `parkres._kernels_py.modular_census`.  The per-list work (simulate,
    record the empty-spot pattern) runs at C level; patterns are decomposed
    once each afterwards with the shared Python helpers.
    """
    cdef int length = g * s
    cdef int m = length - k
    patterns = {}
    if m == 0:
        patterns[(1 << length) - 1] = 1
        return _classify(patterns, length, g)
    if length > 62:
        # Fall back entirely to the reference implementation: the empty
        # pattern no longer fits a machine word.  Only reachable for tiny
        # car counts, so speed is irrelevant.
        from parkres._kernels_py import modular_census as slow
        return slow(g, s, k)

    cdef int *digits = <int *> calloc(m, sizeof(int))
    cdef char *occ = <char *> calloc(length, sizeof(char))
    if digits == NULL or occ == NULL:
        free(digits)
        free(occ)
        raise MemoryError()
    cdef unsigned long long mask, full
    cdef int i, t, pos
    cdef bint more = True
    full = ((<unsigned long long> 1) << length) - 1
    try:
        while more:
            for i in range(length):
                occ[i] = 0
            for i in range(m):
                t = digits[i] * g
                while occ[t]:
                    t += 1
                    if t == length:
                        t = 0
                occ[t] = 1
            mask = 0
            for i in range(length - 1, -1, -1):
                mask = (mask << 1) | (0 if occ[i] else 1)
            key = mask
            prev = patterns.get(key)
            patterns[key] = 1 if prev is None else prev + 1
            pos = m - 1
            while pos >= 0 and digits[pos] == s - 1:
                digits[pos] = 0
                pos -= 1
            if pos < 0:
                more = False
            else:
                digits[pos] += 1
    finally:
        free(digits)
        free(occ)
    return _classify(patterns, length, g)


def _classify(dict patterns, int length, int g):
    census = {}
    for mask, cnt in patterns.items():
        lam, mu, _ = class_from_mask(mask, length, g)
        key = canonical_class(lam, mu)
        prev = census.get(key)
        census[key] = cnt if prev is None else prev + cnt
    return census
