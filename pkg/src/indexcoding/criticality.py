"""Edge and graph criticality classification.

An edge is critical when deleting it strictly shrinks the capacity region.
The decision cascade applies, in order: two necessary conditions (the edge
must lie on a directed cycle, and its tail's side information must not be
contained in its head's), the unicycle sufficient condition (the edge sits
inside an induced subgraph whose edge set is a single Hamiltonian cycle),
and finally an elimination step: if no unicycle contains the edge and the
outer bound is tight for the edge-deleted graph, the deletion cannot have
changed the capacity region.  Edges surviving all four steps stay honestly
indeterminate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import CertificationError, mais_tight_via_flcc
from .graphs import Digraph, GraphError, minimal_cyclic_set_through

CRITICAL = "critical"
NONCRITICAL = "noncritical"
INDETERMINATE = "indeterminate"

REASON_UNICYCLE = "unicycle_witness"
REASON_NO_CYCLE = "no_directed_cycle"
REASON_DEGRADED = "degraded_side_info"
REASON_TIGHT = "mais_tight_after_removal"
REASON_UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class EdgeVerdict:
    edge: tuple[int, int]
    status: str
    reason: str
    witness: frozenset[int] | None = None


@dataclass
class GraphVerdict:
    per_edge: dict[tuple[int, int], EdgeVerdict]
    graph_status: str
    vacuous: bool = False


def is_unicycle(G: Digraph) -> bool:
    """True iff the whole edge set is one Hamiltonian cycle."""
    n = G.n
    if n < 2 or len(G.edges) != n:
        return False
    if any(s.bit_count() != 1 for s in G.succ_masks):
        return False
    if any(p.bit_count() != 1 for p in G.pred_masks):
        return False
    return G.is_strongly_connected()


def unicycle_order(G: Digraph, nodes: frozenset[int]) -> tuple[int, ...]:
    """Hamiltonian cycle order of the unicycle induced on ``nodes``."""
    sub = G.induced_subgraph(nodes)
    if not is_unicycle(sub):
        raise GraphError(f"nodes {sorted(nodes)} do not induce a unicycle")
    start = min(nodes)
    order = [start]
    succ = {i: j for i, j in sub.edges}
    cur = succ[start]
    while cur != start:
        order.append(cur)
        cur = succ[cur]
    return tuple(order)


def find_unicycle_containing(G: Digraph, e: tuple[int, int]) -> frozenset[int] | None:
    """Node set inducing a unicycle through ``e``, or None.

    Searches for the minimal set that is cyclic in G but acyclic once ``e``
    is removed; minimality forces the induced subgraph to be a lone
    Hamiltonian cycle, which is asserted before returning.
    """
    witness = minimal_cyclic_set_through(G, e)
    if witness is None:
        return None
    if not is_unicycle(G.induced_subgraph(witness)):
        raise CertificationError(
            f"minimal cycle support {sorted(witness)} for edge {e} is not a unicycle"
        )
    return witness


def edges_in_unicycles(G: Digraph) -> frozenset[tuple[int, int]]:
    """Exactly the edges contained in some induced unicycle."""
    return frozenset(
        e for e in G.edges if find_unicycle_containing(G, e) is not None
    )


def classify_edge(
    G: Digraph,
    e: tuple[int, int],
    tight_cache: dict | None = None,
) -> EdgeVerdict:
    """Run the four-step decision cascade for one edge.

    ``tight_cache`` may map canonical codes of edge-deleted graphs to their
    tightness verdicts; classification is isomorphism-invariant, so a shared
    cache is sound and saves the expensive step on repeated shapes.
    """
    e = G.require_edge(e)
    if not G.lies_on_directed_cycle(e):
        return EdgeVerdict(e, NONCRITICAL, REASON_NO_CYCLE)
    if not G.is_nondegraded_edge(e):
        return EdgeVerdict(e, NONCRITICAL, REASON_DEGRADED)
    witness = find_unicycle_containing(G, e)
    if witness is not None:
        return EdgeVerdict(e, CRITICAL, REASON_UNICYCLE, witness)
    removed = G.remove_edge(e)
    if tight_cache is not None:
        from .canon import canonical_code

        key = canonical_code(removed)
        if key not in tight_cache:
            tight_cache[key] = mais_tight_via_flcc(removed)
        tight = tight_cache[key]
    else:
        tight = mais_tight_via_flcc(removed)
    if tight:
        return EdgeVerdict(e, NONCRITICAL, REASON_TIGHT)
    return EdgeVerdict(e, INDETERMINATE, REASON_UNRESOLVED)


def classify_graph(G: Digraph, tight_cache: dict | None = None) -> GraphVerdict:
    """Classify every edge and aggregate.

    Critical iff every edge is critical (vacuously so for the edgeless
    graph, which is flagged); not critical as soon as one edge is shown
    removable; indeterminate otherwise.
    """
    per_edge = {e: classify_edge(G, e, tight_cache) for e in sorted(G.edges)}
    if not per_edge:
        return GraphVerdict({}, CRITICAL, vacuous=True)
    statuses = {v.status for v in per_edge.values()}
    if statuses == {CRITICAL}:
        status = CRITICAL
    elif NONCRITICAL in statuses:
        status = NONCRITICAL
    else:
        status = INDETERMINATE
    return GraphVerdict(per_edge, status)


# ----------------------------------------------------------------------
# generators for known all-critical families

def augmented_ring(n: int, i: int, j: int, k: int) -> Digraph:
    """Backward ring on 1..n plus a hub node n+1 wired to i, j, k.

    The ring carries edges (a+1 -> a) for a < n and (1 -> n); the hub gets
    1 -> n+1, n+1 -> i, j -> n+1 and n+1 -> k.  Requires 1 <= i < j <= k <= n.
    Every edge of the result lies in an induced unicycle, so the whole graph
    is critical.
    """
    if not 1 <= i < j <= k <= n:
        raise GraphError(f"need 1 <= i < j <= k <= n, got ({i}, {j}, {k}) with n={n}")
    edges = [(a + 1, a) for a in range(1, n)]
    edges.append((1, n))
    hub = n + 1
    edges += [(1, hub), (hub, i), (j, hub), (hub, k)]
    return Digraph.from_edges(n + 1, set(edges))


def blow_up_cliques(G: Digraph, sizes: dict[int, int]) -> Digraph:
    """Replace each node u by a complete cluster of ``sizes[u]`` nodes.

    Cluster members are mutually bidirectional; an edge runs from every
    member of u's cluster to every member of v's cluster iff u -> v in G.
    New labels are assigned in blocks following the sorted original labels.
    """
    for u in G.labels:
        if sizes.get(u, 0) < 1:
            raise GraphError(f"node {u} needs a positive cluster size")
    block: dict[int, list[int]] = {}
    nxt = 1
    for u in G.labels:
        block[u] = list(range(nxt, nxt + sizes[u]))
        nxt += sizes[u]
    edges = []
    for u in G.labels:
        edges += [(x, y) for x in block[u] for y in block[u] if x != y]
    for u, v in G.edges:
        for x in block[u]:
            for y in block[v]:
                edges.append((x, y))
    return Digraph.from_edges(nxt - 1, set(edges))
