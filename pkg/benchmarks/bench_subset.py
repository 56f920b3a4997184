#!/usr/bin/env python3
"""Benchmark the subset-sampling kernel backends.

Runs the identical workload through the pure-Python kernel and, when built,
the compiled one, and prints the timings side by side.  Both backends
produce bit-identical sums (asserted here on every workload), so the choice
is purely about speed.

Usage: python benchmarks/bench_subset.py
"""

import time

import numpy as np

from alphaindex._kernels import _subset_py

try:
    from alphaindex._kernels import _subset_ext
except ImportError:
    _subset_ext = None

# (group size, subset size, samples): committee-scale ranking workloads
WORKLOADS = [
    (50, 16, 10_000),
    (207, 16, 10_000),
    (207, 100, 5_000),
    (1000, 50, 5_000),
    (40, 8, 100_000),
]


def time_kernel(fn, values, s, m, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(values, s, m, 12345, 0)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    rng = np.random.default_rng(0)
    print(f"{'n':>6} {'subset':>6} {'samples':>8} {'python':>10} {'ext':>10} {'speedup':>8}")
    for n, s, m in WORKLOADS:
        values = [int(v) for v in rng.integers(0, 60, size=n)]
        t_py, sum_py = time_kernel(_subset_py.subset_hindex_sum, values, s, m)
        if _subset_ext is None:
            print(f"{n:>6} {s:>6} {m:>8} {t_py:>9.3f}s {'-':>10} {'-':>8}")
            continue
        t_ext, sum_ext = time_kernel(_subset_ext.subset_hindex_sum, values, s, m)
        assert sum_py == sum_ext, "backends disagree"
        print(
            f"{n:>6} {s:>6} {m:>8} {t_py:>9.3f}s {t_ext:>9.4f}s {t_py / t_ext:>7.1f}x"
        )
    if _subset_ext is None:
        print("\ncompiled kernel not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
