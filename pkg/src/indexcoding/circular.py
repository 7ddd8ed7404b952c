"""The ring-structured family: side information limited to ring neighbors.

These are the graphs where every A_j fits inside {j-1, j+1} (indices wrap
modulo n).  The only possible cycles are two-cycles between ring neighbors
and the full directed ring, which makes the outer bound provably tight
whenever at least one A_j is a *proper* subset of its neighbor pair, and
makes edge criticality decidable exactly: an edge is critical iff it sits
in an induced unicycle.

For n = 3 the neighbor pair {j-1, j+1} is the whole complement of j, so the
membership test is vacuously wide there; results on 3-node graphs carry an
explicit flag in the CLI output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import CertificationError, flcc_verify, mais_region
from .criticality import edges_in_unicycles
from .graphs import Digraph, GraphError

_ZERO = Fraction(0)


def _wrap(n: int, j: int) -> int:
    return (j - 1) % n + 1


def ring_neighbors(n: int, j: int) -> frozenset[int]:
    """{j-1, j+1} wrapped into 1..n (a single node when n <= 2)."""
    return frozenset({_wrap(n, j - 1), _wrap(n, j + 1)}) - {j}


def is_circular_class(G: Digraph) -> bool:
    """Every receiver's side information lies within its ring neighbors."""
    if G.labels != tuple(range(1, G.n + 1)):
        raise GraphError("ring-structure predicates need nodes labeled 1..n")
    return all(G.side_info(j) <= ring_neighbors(G.n, j) for j in G.labels)


def has_proper_side_info(G: Digraph) -> bool:
    """Some receiver holds strictly less than both ring neighbors."""
    if not is_circular_class(G):
        raise GraphError("graph is not in the ring-structured family")
    return any(G.side_info(j) < ring_neighbors(G.n, j) for j in G.labels)


@dataclass(frozen=True)
class Chain:
    """A maximal run of consecutive mutual pairs along the ring."""

    start: int
    length: int  # number of adjacent pairs
    nodes: tuple[int, ...]  # start, start+1, ..., start+length (wrapped)

    def pairs(self) -> list[frozenset[int]]:
        return [frozenset(p) for p in zip(self.nodes, self.nodes[1:])]


def chains(G: Digraph) -> list[Chain]:
    """Maximal runs of bidirectional neighbor pairs, disjoint by maximality.

    Interior nodes of a run hold exactly both neighbors; endpoint nodes hold
    the inward neighbor mutually (an extra one-way edge grazing an endpoint
    does not extend the run).  The all-mutual full ring has no endpoints and
    is rejected.
    """
    if not is_circular_class(G):
        raise GraphError("chain decomposition needs the ring-structured family")
    n = G.n
    if n < 2:
        return []
    if n == 2:
        if G.has_edge(1, 2) and G.has_edge(2, 1):
            return [Chain(1, 1, (1, 2))]
        return []
    bidir = [
        G.has_edge(p + 1, _wrap(n, p + 2)) and G.has_edge(_wrap(n, p + 2), p + 1)
        for p in range(n)
    ]  # bidir[p]: pair {p+1, p+2} is mutual
    if all(bidir):
        raise GraphError("every neighbor pair is mutual; no chain endpoints exist")
    out = []
    for p in range(n):
        if bidir[p] and not bidir[(p - 1) % n]:
            length = 1
            while bidir[(p + length) % n]:
                length += 1
            nodes = tuple(_wrap(n, p + 1 + s) for s in range(length + 1))
            out.append(Chain(nodes[0], length, nodes))
    return sorted(out, key=lambda c: c.start)


def chain_pair_weights(rates: Sequence[Fraction]) -> list[Fraction]:
    """Weights for the adjacent pairs of a chain, one per pair.

    Recursive peeling of the chain ends.  Every weight covers its two nodes'
    residual rates and the total always equals the rate sum over some
    independent (no-two-adjacent) node set of the chain, so the total stays
    inside the outer bound whenever the input rates do.
    """
    r = [Fraction(x) for x in rates]
    if any(x < 0 for x in r):
        raise ValueError("rates must be nonnegative")
    k = len(r) - 1
    if k < 1:
        return []
    if k == 1:
        return [max(r[0], r[1])]
    if k == 2:
        if r[1] <= r[0] + r[2]:
            # the far pair must dominate the end rate to cover receiver i+2
            return [r[0], r[2]]
        return [r[0], r[1] - r[0]]
    if r[0] > r[1]:
        return [r[0], _ZERO] + chain_pair_weights(r[2:])
    if r[-1] > r[-2]:
        return chain_pair_weights(r[:-2]) + [_ZERO, r[-1]]
    # both ends dominated (ties included): peel both, push residue inward
    mid = r[1:-1]
    mid[0] -= r[0]
    mid[-1] -= r[-1]
    return [r[0]] + chain_pair_weights(mid) + [r[-1]]


def chain_rho(chain: Chain, rates: Sequence[Fraction]) -> dict[frozenset[int], Fraction]:
    """Pair-weight map for one chain; ``rates`` aligned with ``chain.nodes``."""
    if len(rates) != len(chain.nodes):
        raise ValueError("one rate per chain node required")
    weights = chain_pair_weights(rates)
    return dict(zip(chain.pairs(), weights))


def construct_rho(
    G: Digraph, rates: Sequence[Fraction]
) -> dict[frozenset[int], Fraction]:
    """Clique weights certifying any outer-bound point of an eligible graph.

    Acyclic graphs and pure directed rings take singleton weights equal to
    the rates; graphs with mutual pairs weight each chain's pairs instead,
    with singletons only for off-chain nodes.  The certificate is verified
    exactly before being returned; a failure is an internal contradiction
    and raises, never a silent repair.
    """
    if not is_circular_class(G):
        raise GraphError("construction needs the ring-structured family")
    if not has_proper_side_info(G):
        raise GraphError("construction needs a receiver with strict neighbor slack")
    rates = [Fraction(x) for x in rates]
    bound = mais_region(G)
    if not bound.region.contains(rates):
        raise GraphError("rate tuple lies outside the outer bound")

    chain_list = chains(G) if any(G.bidir_masks) else []
    rho: dict[frozenset[int], Fraction] = {}
    if chain_list:
        on_chain = {v for c in chain_list for v in c.nodes}
        for j in G.labels:
            rho[frozenset({j})] = _ZERO if j in on_chain else rates[j - 1]
        for c in chain_list:
            rho.update(chain_rho(c, [rates[v - 1] for v in c.nodes]))
    else:
        if not G.is_acyclic() and not _is_pure_ring(G):
            raise CertificationError(
                "cycle without mutual pairs must be the full directed ring"
            )
        for j in G.labels:
            rho[frozenset({j})] = rates[j - 1]

    if not flcc_verify(G, rates, rho):
        raise CertificationError(
            f"constructed weights fail the covering program for rates "
            f"{[str(x) for x in rates]} on {G!r}"
        )
    return rho


def _is_pure_ring(G: Digraph) -> bool:
    n = G.n
    forward = all(G.has_edge(j, _wrap(n, j + 1)) for j in G.labels)
    backward = all(G.has_edge(_wrap(n, j + 1), j) for j in G.labels)
    return len(G.edges) == n and (forward or backward)


def verify_tightness(G: Digraph) -> bool:
    """Certify every outer-bound vertex by construction and by the LP.

    Two independent certifiers must agree on every extreme point; a False
    return means the tightness claim failed somewhere and is a finding, not
    a normal outcome.
    """
    from .bounds import flcc_achievable

    for vertex in mais_region(G).region.vertices():
        try:
            construct_rho(G, vertex)
        except CertificationError:
            return False
        ok, _ = flcc_achievable(G, vertex)
        if not ok:
            return False
    return True


def critical_edges_circular(G: Digraph) -> frozenset[tuple[int, int]]:
    """Exactly the unicycle-covered edges; no indeterminacy in this family."""
    if not is_circular_class(G):
        raise GraphError("exact criticality needs the ring-structured family")
    return edges_in_unicycles(G)
