# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-sampling kernel.

Mirrors ``_subset_py.py`` exactly; see the package docstring in
``alphaindex._kernels`` for the shared sampling contract.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15u


cdef inline uint64_t _mix(uint64_t z) nogil:
    z ^= z >> 30
    z *= 0xBF58476D1CE4E5B9u
    z ^= z >> 27
    z *= 0x94D049BB133111EBu
    z ^= z >> 31
    return z


def subset_hindex_sum(values, sample_size, n_samples, seed, key):
    """Sum of h-indexes over ``n_samples`` random subsets of ``values``.

    Each subset has ``sample_size`` elements drawn without replacement.
    ``seed`` and ``key`` select the deterministic stream; sample ``j`` uses
    a state derived from ``(seed, key, j)`` only.
    """
    cdef Py_ssize_t n = len(values)
    cdef Py_ssize_t s = sample_size
    cdef int64_t m = n_samples
    cdef uint64_t useed = seed
    cdef uint64_t ukey = key
    if not 1 <= s <= n:
        raise ValueError(f"sample_size must be in [1, {n}], got {sample_size}")
    if m < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")

    cdef int64_t *vals = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *idx = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *swaps = <int64_t *> malloc(s * sizeof(int64_t))
    cdef int64_t *counts = <int64_t *> malloc((s + 1) * sizeof(int64_t))
    if vals == NULL or idx == NULL or swaps == NULL or counts == NULL:
        free(vals); free(idx); free(swaps); free(counts)
        raise MemoryError()

    cdef Py_ssize_t i, t
    cdef int64_t j, k, r, v, acc, tmp, total = 0
    cdef uint64_t base, state
    try:
        for i in range(n):
            vals[i] = values[i]
            if vals[i] < 0:
                raise ValueError("values must be non-negative")
            idx[i] = i
        base = _mix(useed + (ukey + 1) * GOLDEN)
        with nogil:
            for j in range(m):
                state = _mix(base + (<uint64_t> j + 1) * GOLDEN)
                # partial Fisher-Yates: idx[0:s] becomes the subset
                for t in range(s):
                    state = state + GOLDEN
                    r = t + <int64_t> (_mix(state) % <uint64_t> (n - t))
                    tmp = idx[t]; idx[t] = idx[r]; idx[r] = tmp
                    swaps[t] = r
                # h-index of the subset by counting, values clipped at s
                for t in range(s + 1):
                    counts[t] = 0
                for t in range(s):
                    v = vals[idx[t]]
                    counts[v if v < s else s] += 1
                acc = 0
                for k in range(s, 0, -1):
                    acc += counts[k]
                    if acc >= k:
                        total += k
                        break
                # undo the swaps so the next sample starts from the identity
                for t in range(s - 1, -1, -1):
                    r = swaps[t]
                    tmp = idx[t]; idx[t] = idx[r]; idx[r] = tmp
    finally:
        free(vals); free(idx); free(swaps); free(counts)
    return total
