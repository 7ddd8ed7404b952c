"""Exact-arithmetic analysis of index coding side-information graphs.

Rate-region outer/inner bounds, unicycle-based edge criticality, cycle
codes with exhaustive verification, and full censuses of small instances.
"""

from .bounds import (
    CertificationError,
    MaisBound,
    flcc_achievable,
    flcc_verify,
    mais_region,
    mais_shrinks_on_removal,
    mais_tight_via_flcc,
    maximal_acyclic_sets,
    symmetric_bounds,
)
from .canon import (
    CanonicalCode,
    backend_name,
    canonical_code,
    canonical_form,
    enumerate_nonisomorphic,
)
from .census import CensusReport, CensusRow, census_row, run_census
from .circular import (
    Chain,
    chain_pair_weights,
    chains,
    construct_rho,
    critical_edges_circular,
    has_proper_side_info,
    is_circular_class,
    verify_tightness,
)
from .codec import IndexCode, achieved_rates, build_cycle_code, verify_code
from .criticality import (
    CRITICAL,
    INDETERMINATE,
    NONCRITICAL,
    EdgeVerdict,
    GraphVerdict,
    augmented_ring,
    blow_up_cliques,
    classify_edge,
    classify_graph,
    edges_in_unicycles,
    find_unicycle_containing,
    is_unicycle,
)
from .graphio import ParseError, format_graph, parse_graph, parse_graph_file
from .graphs import Digraph, GraphError
from .lp import LPInfeasible, LPProblem, LPUnbounded, lp_feasible, lp_maximize
from .regions import RateRegion

__version__ = "0.1.0"

__all__ = [
    "CRITICAL",
    "CanonicalCode",
    "CensusReport",
    "CensusRow",
    "CertificationError",
    "Chain",
    "Digraph",
    "EdgeVerdict",
    "GraphError",
    "GraphVerdict",
    "INDETERMINATE",
    "IndexCode",
    "LPInfeasible",
    "LPProblem",
    "LPUnbounded",
    "MaisBound",
    "NONCRITICAL",
    "ParseError",
    "RateRegion",
    "achieved_rates",
    "augmented_ring",
    "backend_name",
    "blow_up_cliques",
    "build_cycle_code",
    "canonical_code",
    "canonical_form",
    "census_row",
    "chain_pair_weights",
    "chains",
    "classify_edge",
    "classify_graph",
    "construct_rho",
    "critical_edges_circular",
    "edges_in_unicycles",
    "enumerate_nonisomorphic",
    "find_unicycle_containing",
    "flcc_achievable",
    "flcc_verify",
    "format_graph",
    "has_proper_side_info",
    "is_circular_class",
    "is_unicycle",
    "lp_feasible",
    "lp_maximize",
    "mais_region",
    "mais_shrinks_on_removal",
    "mais_tight_via_flcc",
    "maximal_acyclic_sets",
    "parse_graph",
    "parse_graph_file",
    "run_census",
    "symmetric_bounds",
    "verify_code",
    "verify_tightness",
]
