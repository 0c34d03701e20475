#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each counting workload on both implementations, checks they agree,
and prints the timings.  Usage:

    python benchmarks/bench_backends.py [--quick]
"""

import sys
import time

from parkres import _kernels_py

try:
    from parkres import _kernels
except ImportError:
    _kernels = None

QUICK = "--quick" in sys.argv

WORKLOADS = [
    ("count pf        n=8, s=8 ", "count_parking", (8, tuple(range(1, 9)), False)),
    ("count pf        n=10, s=4", "count_parking", (10, (1, 2, 3, 4), False)),
    ("count prime     n=9, s=4 ", "count_parking", (9, (1, 2, 3, 4), True)),
    ("count pf        n=8, gaps", "count_parking", (8, (1, 4, 7), False)),
    ("min-defect      n=8, s=4 ", "count_min_defect", (8, 4)),
    ("ones census     n=8, s=5 ", "ones_census", (8, 5)),
    ("modular census  g=3, s=3, k=2", "modular_census", (3, 3, 2)),
    ("modular census  g=2, s=4, k=1", "modular_census", (2, 4, 1)),
    ("modular census  g=2, s=5, k=3", "modular_census", (2, 5, 3)),
]

if QUICK:
    WORKLOADS = WORKLOADS[:2] + WORKLOADS[-2:]


def best_of(fn, args, repeats=3):
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - start)
    return value, best


def main():
    if _kernels is None:
        print("compiled kernels not available; showing pure-Python timings only")
    print(f"{'workload':<32}{'python':>10}{'cython':>10}{'speedup':>9}")
    for label, name, args in WORKLOADS:
        py_fn = getattr(_kernels_py, name)
        py_value, py_time = best_of(py_fn, args, repeats=1 if QUICK else 2)
        if _kernels is None:
            print(f"{label:<32}{py_time:>9.3f}s{'-':>10}{'-':>9}")
            continue
        cy_fn = getattr(_kernels, name)
        cy_value, cy_time = best_of(cy_fn, args)
        if py_value != cy_value:
            raise SystemExit(f"MISMATCH on {label}: {py_value} != {cy_value}")
        print(
            f"{label:<32}{py_time:>9.3f}s{cy_time:>9.4f}s{py_time / cy_time:>8.1f}x"
        )


if __name__ == "__main__":
    main()
