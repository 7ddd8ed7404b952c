"""Outer and inner bounds on the broadcast rate region.

The outer bound collects one unit-sum constraint per maximal acyclic induced
node set.  The inner bound assigns fractional weights to cliques: a rate
tuple is certified achievable when weights rho_S exist with every receiver's
load of cliques not inside its side information at most one, and every
receiver covered by total weight at least its rate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .graphs import Digraph, GraphError, minimal_cyclic_set_through
from .lp import LPProblem, lp_feasible, lp_maximize
from .regions import RateRegion

SUBSET_SCAN_LIMIT = 20

_ZERO = Fraction(0)
_ONE = Fraction(1)


class CertificationError(RuntimeError):
    """An internally constructed certificate failed its own validity check."""


@dataclass(frozen=True)
class MaisBound:
    region: RateRegion
    mais_number: int


def _require_contiguous(G: Digraph) -> None:
    if G.labels != tuple(range(1, G.n + 1)):
        raise GraphError("rate-region operations need nodes labeled 1..n")


def maximal_acyclic_sets(G: Digraph) -> list[frozenset[int]]:
    """All inclusion-maximal node sets inducing acyclic subgraphs."""
    if G.n > SUBSET_SCAN_LIMIT:
        raise GraphError(f"subset scan limited to n <= {SUBSET_SCAN_LIMIT}")
    n = G.n
    acyclic = [not G.has_cycle_within(mask) for mask in range(1 << n)]
    out = []
    for mask in range(1, 1 << n):
        if acyclic[mask] and all(
            not acyclic[mask | (1 << b)] for b in range(n) if not mask >> b & 1
        ):
            out.append(G.node_set(mask))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def mais_region(G: Digraph) -> MaisBound:
    """The acyclic-set outer bound as a rate region, plus its largest set size."""
    _require_contiguous(G)
    sets = maximal_acyclic_sets(G)
    region = RateRegion.from_sets(G.n, sets)
    return MaisBound(region, max((len(s) for s in sets), default=0))


# ----------------------------------------------------------------------
# fractional local clique covering

def _clique_structures(G: Digraph):
    cliques = G.cliques()
    masks = [G.node_mask(s) for s in cliques]
    return cliques, masks


def flcc_problem(G: Digraph, rates: Sequence[Fraction]) -> tuple[LPProblem, list[frozenset[int]]]:
    """Feasibility program over clique weights certifying ``rates``."""
    _require_contiguous(G)
    if len(rates) != G.n:
        raise ValueError(f"rate tuple has {len(rates)} entries, graph has {G.n}")
    rates = [Fraction(r) for r in rates]
    if any(r < 0 for r in rates):
        raise ValueError("rates must be nonnegative")
    cliques, masks = _clique_structures(G)
    k = len(cliques)
    rows = []
    for j in range(G.n):
        a_j = G.pred_masks[j]
        load = [_ONE if m & ~a_j else _ZERO for m in masks]
        rows.append((load, "<=", _ONE))
    for j in range(G.n):
        cover = [_ONE if m >> j & 1 else _ZERO for m in masks]
        rows.append((cover, ">=", rates[j]))
    one_hot = [_ZERO] * k
    for i in range(k):
        row = one_hot.copy()
        row[i] = _ONE
        rows.append((row, "<=", _ONE))
    return LPProblem.build(k, rows), cliques


def flcc_achievable(
    G: Digraph, rates: Sequence[Fraction]
) -> tuple[bool, dict[frozenset[int], Fraction] | None]:
    """Decide inner-bound membership; on success return a weight witness."""
    problem, cliques = flcc_problem(G, rates)
    ok, x = lp_feasible(problem)
    if not ok:
        return False, None
    return True, {s: v for s, v in zip(cliques, x)}


def flcc_verify(
    G: Digraph,
    rates: Sequence[Fraction],
    rho: Mapping[frozenset[int], Fraction],
) -> bool:
    """Exact check that a weight assignment certifies ``rates``."""
    _require_contiguous(G)
    if len(rates) != G.n:
        return False
    clique_set = set(G.cliques())
    weights: dict[frozenset[int], Fraction] = {}
    for s, v in rho.items():
        s = frozenset(s)
        v = Fraction(v)
        if s not in clique_set or not 0 <= v <= 1:
            return False
        weights[s] = v
    for j in G.labels:
        a_j = G.side_info(j)
        load = sum((v for s, v in weights.items() if not s <= a_j), _ZERO)
        if load > 1:
            return False
        cover = sum((v for s, v in weights.items() if j in s), _ZERO)
        if cover < Fraction(rates[j - 1]):
            return False
    return True


# ----------------------------------------------------------------------
# comparisons and tightness

def mais_shrinks_on_removal(
    G: Digraph, e: tuple[int, int]
) -> tuple[bool, frozenset[int] | None]:
    """Does removing ``e`` strictly shrink the outer bound?

    Decided by comparing the two regions combinatorially; the witness, when
    the answer is yes, is the minimal node set that is cyclic in G but
    acyclic once ``e`` is gone.
    """
    e = G.require_edge(e)
    before = mais_region(G).region
    after = mais_region(G.remove_edge(e)).region
    if not after.proper_subset_of(before):
        return False, None
    witness = minimal_cyclic_set_through(G, e)
    if witness is None:
        raise CertificationError(
            f"outer bound shrank for edge {e} but no witness set exists"
        )
    return True, witness


def _pareto_maximal(points: Sequence[tuple[Fraction, ...]]) -> list[tuple[Fraction, ...]]:
    out = []
    for p in points:
        if not any(
            q != p and all(a >= b for a, b in zip(q, p)) for q in points
        ):
            out.append(p)
    return out


def mais_tight_via_flcc(G: Digraph) -> bool:
    """True iff every extreme point of the outer bound is inner-achievable.

    Achievability is monotone under coordinatewise decrease, so only the
    Pareto-maximal vertices need an LP; other vertices inherit a verified
    witness.  True means the two bounds coincide, hence equal the capacity
    region.
    """
    if G.n > 8:
        raise GraphError("tightness certification limited to n <= 8")
    verts = mais_region(G).region.vertices()
    witnesses: list[dict[frozenset[int], Fraction]] = []
    for v in _pareto_maximal(verts):
        if any(flcc_verify(G, v, w) for w in witnesses):
            continue
        ok, rho = flcc_achievable(G, v)
        if not ok:
            return False
        witnesses.append(rho)
    return True


def symmetric_bounds(G: Digraph) -> tuple[Fraction, Fraction]:
    """(best certified symmetric rate, outer symmetric cap)."""
    if G.n == 0:
        raise GraphError("symmetric bounds need at least one node")
    bound = mais_region(G)
    upper = Fraction(1, bound.mais_number)
    cliques, masks = _clique_structures(G)
    k = len(cliques)
    # variables: rho_1..rho_k, then the common rate
    rows = []
    for j in range(G.n):
        a_j = G.pred_masks[j]
        load = [_ONE if m & ~a_j else _ZERO for m in masks] + [_ZERO]
        rows.append((load, "<=", _ONE))
    for j in range(G.n):
        cover = [_ONE if m >> j & 1 else _ZERO for m in masks] + [-_ONE]
        rows.append((cover, ">=", _ZERO))
    for i in range(k):
        row = [_ZERO] * (k + 1)
        row[i] = _ONE
        rows.append((row, "<=", _ONE))
    objective = [_ZERO] * k + [_ONE]
    problem = LPProblem.build(k + 1, rows, objective)
    lower, _ = lp_maximize(problem)
    return lower, upper
