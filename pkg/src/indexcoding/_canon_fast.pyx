# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonicalization kernels: min-over-relabelings of packed codes."""

import numpy as np


def min_code_tables(object code, object tables, object shifts, object masks):
    cdef unsigned long long c = <unsigned long long> code
    cdef unsigned long long best = c
    cdef unsigned long long v
    cdef unsigned long long[:, :, ::1] t64
    cdef unsigned int[:, :, ::1] t32
    cdef long long[:] sh = np.ascontiguousarray(shifts, dtype=np.int64)
    cdef unsigned long long[:] mk = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef Py_ssize_t p, ch, nperm, nchunk
    if tables.dtype == np.uint32:
        t32 = tables
        nperm = t32.shape[0]
        nchunk = t32.shape[1]
        for p in range(1, nperm):
            v = 0
            for ch in range(nchunk):
                v |= t32[p, ch, (c >> sh[ch]) & mk[ch]]
            if v < best:
                best = v
    else:
        t64 = tables
        nperm = t64.shape[0]
        nchunk = t64.shape[1]
        for p in range(1, nperm):
            v = 0
            for ch in range(nchunk):
                v |= t64[p, ch, (c >> sh[ch]) & mk[ch]]
            if v < best:
                best = v
    return best


def min_code_generic(object code, object bit_maps):
    cdef unsigned long long c = <unsigned long long> code
    cdef unsigned long long best = c
    cdef unsigned long long v, rem, low
    cdef Py_ssize_t nperm = len(bit_maps)
    cdef Py_ssize_t nbits = len(bit_maps[0]) if nperm else 0
    cdef Py_ssize_t p, b
    flat = np.empty(nperm * max(nbits, 1), dtype=np.int64)
    for p in range(nperm):
        for b in range(nbits):
            flat[p * nbits + b] = bit_maps[p][b]
    cdef long long[:] m = flat
    for p in range(1, nperm):
        v = 0
        rem = c
        while rem:
            low = rem & (~rem + 1)
            b = 0
            while not (low >> b) & 1:
                b += 1
            v |= (<unsigned long long> 1) << m[p * nbits + b]
            rem ^= low
        if v < best:
            best = v
    return best


def canonical_reps(int nbits, object tables, object shifts, object masks):
    """All packed codes equal to their own canonical form, ascending."""
    cdef unsigned long long total = (<unsigned long long> 1) << nbits
    cdef long long[:] sh = np.ascontiguousarray(shifts, dtype=np.int64)
    cdef unsigned long long[:] mk = np.ascontiguousarray(masks, dtype=np.uint64)
    out_arr = np.empty(total, dtype=np.uint32)
    cdef unsigned int[:] out = out_arr
    cdef unsigned int[:, :, ::1] t32 = tables.astype(np.uint32, copy=False)
    cdef Py_ssize_t nperm = t32.shape[0]
    cdef Py_ssize_t nchunk = t32.shape[1]
    cdef unsigned long long code
    cdef unsigned int v
    cdef Py_ssize_t p, ch, cnt = 0
    cdef bint keep
    for code in range(total):
        keep = True
        for p in range(1, nperm):
            v = 0
            for ch in range(nchunk):
                v |= t32[p, ch, (code >> sh[ch]) & mk[ch]]
            if v < code:
                keep = False
                break
        if keep:
            out[cnt] = <unsigned int> code
            cnt += 1
    return out_arr[:cnt].copy()
