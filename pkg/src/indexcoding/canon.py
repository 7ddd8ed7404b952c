"""Canonical forms and exhaustive enumeration of non-isomorphic digraphs.

A digraph on n nodes is packed into an n*(n-1)-bit integer: the off-diagonal
adjacency cells in row-major order, first cell in the most significant bit,
so integer order equals lexicographic order of the serialized matrix.  The
canonical code is the minimum of that integer over all n! relabelings, which
makes code equality exactly isomorphism.

The inner minimization is the one hot loop of the package.  A compiled
kernel is used when available ("fast" backend, built from _canon_fast.pyx);
otherwise a vectorized numpy fallback ("pure" backend) is selected at
import.  Set INDEXCODING_PURE=1 to force the fallback.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Digraph, GraphError

CANONICAL_NODE_LIMIT = 8  # factorial relabeling scan
ENUMERATION_NODE_LIMIT = 5  # 2^(n(n-1)) labeled graphs
_TABLE_NODE_LIMIT = 6  # beyond this, chunk lookup tables get too large

if os.environ.get("INDEXCODING_PURE"):
    from . import _canon_pure as _backend

    BACKEND = "pure"
else:
    try:
        from . import _canon_fast as _backend  # type: ignore[no-redef]

        BACKEND = "fast"
    except ImportError:
        from . import _canon_pure as _backend  # type: ignore[no-redef]

        BACKEND = "pure"


def backend_name() -> str:
    """Which canonicalization kernel was selected at import."""
    return BACKEND


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant code: minimal adjacency serialization."""

    n: int
    bits: int

    def as_bitstring(self) -> str:
        """Full n*n row-major adjacency string, diagonal zeros included."""
        n = self.n
        packed = format(self.bits, f"0{n * (n - 1)}b") if n > 1 else ""
        out = []
        k = 0
        for i in range(n):
            for j in range(n):
                if i == j:
                    out.append("0")
                else:
                    out.append(packed[k])
                    k += 1
        return "".join(out)

    def __str__(self):
        return f"{self.n}:{self.bits:x}"


# ----------------------------------------------------------------------
# packing

def _cell_positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def pack_digraph(G: Digraph) -> int:
    """Row-major off-diagonal adjacency bits of G, over its sorted labels."""
    code = 0
    for a in G.labels:
        for b in G.labels:
            if a != b:
                code = code << 1 | ((a, b) in G.edges)
    return code


def unpack_digraph(n: int, code: int) -> Digraph:
    """Inverse of :func:`pack_digraph` for graphs labeled 1..n."""
    cells = _cell_positions(n)
    nbits = len(cells)
    edges = [
        (i + 1, j + 1)
        for p, (i, j) in enumerate(cells)
        if code >> (nbits - 1 - p) & 1
    ]
    return Digraph.from_edges(n, edges)


# ----------------------------------------------------------------------
# permutation structures (shared by both backends)

@lru_cache(maxsize=None)
def _perm_bit_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation: map from source bit position to destination.

    Bit positions are integer bit indices (LSB = 0) of the packed code.  The
    first entry is the identity permutation.
    """
    cells = _cell_positions(n)
    nbits = len(cells)
    pos = {cell: p for p, cell in enumerate(cells)}
    maps = []
    for perm in itertools.permutations(range(n)):
        m = [0] * nbits
        for p, (i, j) in enumerate(cells):
            src = nbits - 1 - p
            dst = nbits - 1 - pos[(perm[i], perm[j])]
            m[src] = dst
        maps.append(tuple(m))
    return tuple(maps)


@lru_cache(maxsize=None)
def _chunk_tables(n: int):
    """Per-permutation lookup tables mapping code chunks to permuted bits.

    Returns ``(tables, shifts, masks)`` where ``tables[p, c, x]`` is the OR
    of destination bits for chunk ``c`` of the code holding value ``x``.
    Chunk widths are at most 10 bits, so tables stay small for n <= 6.
    """
    if n > _TABLE_NODE_LIMIT:
        raise ValueError(f"chunk tables limited to n <= {_TABLE_NODE_LIMIT}")
    maps = _perm_bit_maps(n)
    nbits = n * (n - 1)
    width = 10
    shifts = list(range(0, max(nbits, 1), width))
    dtype = np.uint32 if nbits <= 32 else np.uint64
    tables = np.zeros((len(maps), len(shifts), 1 << width), dtype=dtype)
    entry_bits = np.arange(1 << width, dtype=np.uint64)
    for p, m in enumerate(maps):
        for c, shift in enumerate(shifts):
            acc = np.zeros(1 << width, dtype=np.uint64)
            for local in range(min(width, nbits - shift)):
                src = shift + local
                acc |= ((entry_bits >> local) & 1) << np.uint64(m[src])
            tables[p, c] = acc.astype(dtype)
    masks = np.full(len(shifts), (1 << width) - 1, dtype=np.uint64)
    return tables, np.asarray(shifts, dtype=np.int64), masks


# ----------------------------------------------------------------------
# public operations

def canonical_packed(n: int, code: int) -> int:
    """Minimum packed code over all relabelings."""
    if n > CANONICAL_NODE_LIMIT:
        raise GraphError(
            f"canonical form needs an exhaustive scan over n! relabelings; "
            f"n={n} exceeds the supported limit {CANONICAL_NODE_LIMIT}"
        )
    if n <= 1:
        return 0
    if n <= _TABLE_NODE_LIMIT:
        tables, shifts, masks = _chunk_tables(n)
        return int(_backend.min_code_tables(code, tables, shifts, masks))
    return int(_backend.min_code_generic(code, _perm_bit_maps(n)))


def canonical_code(G: Digraph) -> CanonicalCode:
    """Canonical code of G; equal codes exactly characterize isomorphism."""
    return CanonicalCode(G.n, canonical_packed(G.n, pack_digraph(G)))


def canonical_form(G: Digraph) -> Digraph:
    """The canonical representative of G's isomorphism class, labeled 1..n."""
    return unpack_digraph(G.n, canonical_code(G).bits)


def enumerate_nonisomorphic(n: int) -> list[Digraph]:
    """One representative per isomorphism class, ascending canonical code."""
    if not 0 <= n <= ENUMERATION_NODE_LIMIT:
        raise GraphError(
            f"exhaustive enumeration supported for 0 <= n <= {ENUMERATION_NODE_LIMIT}"
        )
    return [unpack_digraph(n, int(code)) for code in enumerate_canonical_codes(n)]


def enumerate_canonical_codes(n: int) -> np.ndarray:
    """Packed canonical codes of all isomorphism classes on n nodes, ascending."""
    if not 0 <= n <= ENUMERATION_NODE_LIMIT:
        raise GraphError(
            f"exhaustive enumeration supported for 0 <= n <= {ENUMERATION_NODE_LIMIT}"
        )
    if n <= 1:
        return np.zeros(1, dtype=np.uint32)
    tables, shifts, masks = _chunk_tables(n)
    return _backend.canonical_reps(n * (n - 1), tables, shifts, masks)
