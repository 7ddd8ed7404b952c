"""Numpy fallback for the canonicalization kernels.

Same contracts as the compiled module `_canon_fast`; used when the
extension is unavailable or INDEXCODING_PURE is set.
"""

from __future__ import annotations

import numpy as np


def min_code_tables(code: int, tables: np.ndarray, shifts: np.ndarray, masks: np.ndarray) -> int:
    best = code
    nchunks = tables.shape[1]
    for p in range(1, tables.shape[0]):
        row = tables[p]
        v = 0
        for c in range(nchunks):
            v |= int(row[c, (code >> int(shifts[c])) & int(masks[c])])
        if v < best:
            best = v
    return best


def min_code_generic(code: int, bit_maps) -> int:
    best = code
    for m in bit_maps[1:]:
        v = 0
        c = code
        while c:
            low = c & -c
            v |= 1 << m[low.bit_length() - 1]
            c ^= low
        if v < best:
            best = v
    return best


def canonical_reps(nbits: int, tables: np.ndarray, shifts: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """All packed codes equal to their own canonical form, ascending.

    Vectorized min over permutations: for each permutation the permuted code
    of every labeled graph is assembled from chunk lookups, exploiting that
    the code array is exactly arange(2**nbits).
    """
    dtype = tables.dtype
    total = 1 << nbits
    codes = np.arange(total, dtype=dtype)
    best = codes.copy()
    nchunks = tables.shape[1]
    for p in range(1, tables.shape[0]):
        row = tables[p]
        if nchunks == 1:
            permuted = row[0][: total].copy()
        elif nchunks == 2:
            # outer OR over (high chunk, low chunk) enumerates codes in order
            hi = row[1][: total >> int(shifts[1])]
            permuted = np.bitwise_or.outer(hi, row[0]).ravel()
        else:
            permuted = row[0][codes & masks[0].astype(dtype)]
            for c in range(1, nchunks):
                permuted |= row[c][(codes >> dtype.type(shifts[c])) & dtype.type(masks[c])]
        np.minimum(best, permuted, out=best)
    return codes[best == codes].copy()
