# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled enumeration kernels: Gray-code codeword enumeration with
hardware popcount. Same contracts as _pure."""

import numpy as np

from libc.stdint cimport uint64_t, int64_t, uint8_t, int16_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def weight_enum_r2(packed, n, base=None):
    cdef uint64_t[:, ::1] rows = np.ascontiguousarray(packed, dtype=np.uint64)
    cdef Py_ssize_t L = rows.shape[0]
    cdef Py_ssize_t W = rows.shape[1]
    state_arr = (
        np.array(base, dtype=np.uint64, copy=True)
        if base is not None
        else np.zeros(W, dtype=np.uint64)
    )
    cdef uint64_t[::1] state = state_arr
    counts_arr = np.zeros(n + 1, dtype=np.int64)
    first_arr = np.full(n + 1, -1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef int64_t[::1] first = first_arr
    cdef uint64_t i, total = (<uint64_t>1) << L
    cdef uint64_t m
    cdef Py_ssize_t j, k
    cdef int w
    with nogil:
        w = 0
        for k in range(W):
            w += __builtin_popcountll(state[k])
        counts[w] += 1
        first[w] = 0
        for i in range(1, total):
            j = __builtin_ctzll(i)
            w = 0
            for k in range(W):
                state[k] ^= rows[j, k]
                w += __builtin_popcountll(state[k])
            counts[w] += 1
            m = i ^ (i >> 1)
            if first[w] < 0 or <int64_t>m < first[w]:
                first[w] = <int64_t>m
    return counts_arr, first_arr


def weight_enum_modr(rows_in, r, base=None):
    cdef int16_t[:, ::1] rows = np.ascontiguousarray(rows_in, dtype=np.int16)
    cdef Py_ssize_t L = rows.shape[0]
    cdef Py_ssize_t n = rows.shape[1]
    state_arr = (
        np.array(base, dtype=np.int16, copy=True)
        if base is not None
        else np.zeros(n, dtype=np.int16)
    )
    cdef int16_t[::1] state = state_arr
    counts_arr = np.zeros(n + 1, dtype=np.int64)
    first_arr = np.full(n + 1, -1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef int64_t[::1] first = first_arr
    digits_arr = np.zeros(L, dtype=np.int64)
    focus_arr = np.arange(L + 1, dtype=np.int64)
    dir_arr = np.ones(L, dtype=np.int64)
    powers_arr = r ** np.arange(L, dtype=np.int64)
    cdef int64_t[::1] digits = digits_arr
    cdef int64_t[::1] focus = focus_arr
    cdef int64_t[::1] direction = dir_arr
    cdef int64_t[::1] powers = powers_arr
    cdef int64_t key = 0, delta
    cdef Py_ssize_t j, k
    cdef int16_t rr = <int16_t>r
    cdef int w
    with nogil:
        while True:
            w = 0
            for k in range(n):
                if state[k] != 0:
                    w += 1
            counts[w] += 1
            if first[w] < 0 or key < first[w]:
                first[w] = key
            j = focus[0]
            focus[0] = 0
            if j == L:
                break
            delta = direction[j]
            digits[j] += delta
            key += delta * powers[j]
            if delta > 0:
                for k in range(n):
                    state[k] += rows[j, k]
                    if state[k] >= rr:
                        state[k] -= rr
            else:
                for k in range(n):
                    state[k] -= rows[j, k]
                    if state[k] < 0:
                        state[k] += rr
            if digits[j] == 0 or digits[j] == rr - 1:
                direction[j] = -direction[j]
                focus[j] = focus[j + 1]
                focus[j + 1] = j + 1
    return counts_arr, first_arr
