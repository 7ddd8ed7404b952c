"""Directed side-information graphs and their structural predicates.

Nodes carry positive integer labels (1..n for freshly built graphs; induced
subgraphs keep the labels of their host).  An edge ``(i, j)`` records that
receiver ``j`` holds message ``i``, so the side information set ``A_j`` of a
node is exactly its set of in-neighbors.  All values are immutable; every
operation returns a new graph or a plain Python value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed construction, or an operation on a missing node or edge."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_has_cycle(succ_masks: Sequence[int], mask: int) -> bool:
    """True iff the subgraph induced on ``mask`` contains a directed cycle.

    Peels nodes without successors inside the current set; a nonempty fixed
    point means every remaining node has an internal successor, which forces
    a cycle.
    """
    m = mask
    while True:
        keep = 0
        t = m
        while t:
            low = t & -t
            if succ_masks[low.bit_length() - 1] & m & ~low:
                keep |= low
            t ^= low
        if keep == m:
            return m != 0
        m = keep


def mask_reachable(adj_masks: Sequence[int], start: int) -> int:
    """Closure of ``start`` under the given adjacency masks."""
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        t = frontier
        while t:
            low = t & -t
            nxt |= adj_masks[low.bit_length() - 1]
            t ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


@dataclass(frozen=True)
class Digraph:
    """Immutable simple digraph over a fixed label set, no self-loops."""

    labels: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if list(self.labels) != sorted(set(self.labels)):
            raise GraphError("node labels must be distinct and sorted")
        label_set = set(self.labels)
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"self-loop {i} -> {j} is not allowed")
            if i not in label_set or j not in label_set:
                raise GraphError(f"edge {i} -> {j} leaves the node set")

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Digraph:
        if n < 0:
            raise GraphError("node count must be nonnegative")
        return cls(tuple(range(1, n + 1)), frozenset((int(i), int(j)) for i, j in edges))

    @classmethod
    def from_side_info(cls, side_info: Sequence[Iterable[int]]) -> Digraph:
        """Build from per-receiver sets; ``side_info[j-1]`` is what receiver j holds."""
        n = len(side_info)
        edges = []
        for j, known in enumerate(side_info, start=1):
            for i in known:
                i = int(i)
                if i == j:
                    raise GraphError(f"receiver {j} cannot hold its own message")
                if not 1 <= i <= n:
                    raise GraphError(f"receiver {j}: message {i} out of range 1..{n}")
                edges.append((i, j))
        return cls.from_edges(n, edges)

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _bit(self) -> dict[int, int]:
        return {v: b for b, v in enumerate(self.labels)}

    @cached_property
    def succ_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        bit = self._bit
        for i, j in self.edges:
            out[bit[i]] |= 1 << bit[j]
        return tuple(out)

    @cached_property
    def pred_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        bit = self._bit
        for i, j in self.edges:
            out[bit[j]] |= 1 << bit[i]
        return tuple(out)

    @cached_property
    def bidir_masks(self) -> tuple[int, ...]:
        """Per node: mask of mutual (two-cycle) neighbors."""
        return tuple(s & p for s, p in zip(self.succ_masks, self.pred_masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def node_mask(self, nodes: Iterable[int]) -> int:
        bit = self._bit
        mask = 0
        for v in nodes:
            if v not in bit:
                raise GraphError(f"node {v} not in graph")
            mask |= 1 << bit[v]
        return mask

    def node_set(self, mask: int) -> frozenset[int]:
        return frozenset(self.labels[b] for b in bits_of(mask))

    def side_info(self, j: int) -> frozenset[int]:
        """The set of messages receiver ``j`` holds (its in-neighborhood)."""
        if j not in self._bit:
            raise GraphError(f"node {j} not in graph")
        return self.node_set(self.pred_masks[self._bit[j]])

    def side_info_sets(self) -> dict[int, frozenset[int]]:
        return {j: self.side_info(j) for j in self.labels}

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def require_edge(self, e: tuple[int, int]) -> tuple[int, int]:
        e = (int(e[0]), int(e[1]))
        if e not in self.edges:
            raise GraphError(f"edge {e[0]} -> {e[1]} not in graph")
        return e

    def __repr__(self):  # compact, mostly for test failures
        es = ", ".join(f"{i}->{j}" for i, j in sorted(self.edges))
        return f"Digraph(n={self.n}, [{es}])"

    # ------------------------------------------------------------------
    # derived graphs

    def induced_subgraph(self, nodes: Iterable[int]) -> Digraph:
        """Subgraph on ``nodes``, original labels kept in place."""
        keep = frozenset(nodes)
        self.node_mask(keep)  # validates membership
        return Digraph(
            tuple(sorted(keep)),
            frozenset((i, j) for i, j in self.edges if i in keep and j in keep),
        )

    def remove_edge(self, e: tuple[int, int]) -> Digraph:
        e = self.require_edge(e)
        return Digraph(self.labels, self.edges - {e})

    # ------------------------------------------------------------------
    # predicates

    def has_cycle_within(self, mask: int) -> bool:
        return mask_has_cycle(self.succ_masks, mask)

    def is_acyclic(self) -> bool:
        return not self.has_cycle_within(self.full_mask)

    def is_strongly_connected(self) -> bool:
        if self.n <= 1:
            return True
        full = self.full_mask
        return (
            mask_reachable(self.succ_masks, 1) == full
            and mask_reachable(self.pred_masks, 1) == full
        )

    def lies_on_directed_cycle(self, e: tuple[int, int]) -> bool:
        """True iff some directed cycle uses ``e`` (a path e.to -> e.from exists)."""
        i, j = self.require_edge(e)
        back = mask_reachable(self.succ_masks, 1 << self._bit[j])
        return bool(back >> self._bit[i] & 1)

    def is_nondegraded_edge(self, e: tuple[int, int]) -> bool:
        """True iff A_i is not a subset of A_j for edge i -> j."""
        i, j = self.require_edge(e)
        ai = self.pred_masks[self._bit[i]]
        aj = self.pred_masks[self._bit[j]]
        return ai & ~aj != 0

    # ------------------------------------------------------------------
    # cliques

    def cliques(self) -> list[frozenset[int]]:
        """All nonempty bidirectionally complete node sets, singletons included.

        Ordered by size, then lexicographically by sorted member list.
        """
        bid = self.bidir_masks
        found: list[int] = []
        # Grow by appending higher-indexed mutual neighbors only, so every
        # clique is generated exactly once.
        stack = [(1 << b, bid[b] & -(2 << b)) for b in range(self.n)]
        while stack:
            mask, cand = stack.pop()
            found.append(mask)
            t = cand
            while t:
                low = t & -t
                t ^= low
                b = low.bit_length() - 1
                stack.append((mask | low, cand & bid[b] & -(2 << b)))
        sets = [tuple(sorted(self.node_set(m))) for m in found]
        return [frozenset(s) for s in sorted(sets, key=lambda s: (len(s), s))]


def minimal_cyclic_set_through(G: Digraph, e: tuple[int, int]) -> frozenset[int] | None:
    """Smallest node set whose induced subgraph is cyclic only because of ``e``.

    Returns the minimal S (by size, then by numeric bit mask) such that G|_S
    has a directed cycle while (G - e)|_S has none, or None when every cycle
    through ``e`` survives inside every candidate S.  Minimality forces the
    induced subgraph to be a single Hamiltonian cycle.
    """
    i, j = G.require_edge(e)
    bi, bj = G._bit[i], G._bit[j]
    base = (1 << bi) | (1 << bj)
    succ = G.succ_masks
    succ_e = list(succ)
    succ_e[bi] &= ~(1 << bj)
    others = [b for b in range(G.n) if not base >> b & 1]
    for size in range(len(others) + 1):
        best = None
        for extra in itertools.combinations(others, size):
            mask = base
            for b in extra:
                mask |= 1 << b
            if mask_has_cycle(succ, mask) and not mask_has_cycle(succ_e, mask):
                if best is None or mask < best:
                    best = mask
        if best is not None:
            return G.node_set(best)
    return None
