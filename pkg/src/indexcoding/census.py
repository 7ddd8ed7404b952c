"""Batch classification of every non-isomorphic instance at a given size.

The census walks the canonical enumeration in order, classifies every edge
of every instance, and aggregates counts under explicit conventions along
two axes:

* scope: all instances, all except the vacuous (edgeless) one, or only the
  strongly connected ones (a critical graph must be strongly connected, so
  published unicycle-coverage counts use that scope);
* filter: the two per-edge necessary conditions alone, the necessary
  conditions plus the tightness-elimination step of the cascade, or the
  tightness elimination applied on its own.

Every combination is reported so a published figure can be matched to the
convention that produces it.  Consistency violations between the theory's
claims (unicycle coverage implies both necessary conditions) are surfaced
as findings instead of being silently absorbed.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import mais_tight_via_flcc
from .canon import canonical_code, enumerate_canonical_codes, unpack_digraph
from .criticality import (
    CRITICAL,
    INDETERMINATE,
    NONCRITICAL,
    REASON_DEGRADED,
    classify_graph,
    find_unicycle_containing,
)
from .graphs import Digraph, GraphError

CENSUS_NODE_LIMIT = 5


@dataclass
class CensusRow:
    canonical: str
    n: int
    edges: int
    strongly_connected: bool
    all_on_cycle: bool
    all_nondegraded: bool
    all_edges_unicycle: bool
    removable_edge: bool  # some non-unicycle edge has a tight deleted graph
    outer_bound_tight: bool  # the instance's own bounds coincide
    graph_status: str
    vacuous: bool
    critical_edges: int
    noncritical_edges: int
    indeterminate_edges: int
    findings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "canonical": self.canonical,
            "n": self.n,
            "edges": self.edges,
            "strongly_connected": self.strongly_connected,
            "all_on_cycle": self.all_on_cycle,
            "all_nondegraded": self.all_nondegraded,
            "all_edges_unicycle": self.all_edges_unicycle,
            "removable_edge": self.removable_edge,
            "outer_bound_tight": self.outer_bound_tight,
            "graph_status": self.graph_status,
            "vacuous": self.vacuous,
            "critical_edges": self.critical_edges,
            "noncritical_edges": self.noncritical_edges,
            "indeterminate_edges": self.indeterminate_edges,
            "findings": self.findings,
        }


@dataclass
class CensusReport:
    n: int
    total: int
    include_vacuous: bool
    all_edges_unicycle: int
    necessary_pass: int
    residual_indeterminate: int
    conventions: dict
    findings: list[str]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "all_edges_unicycle": self.all_edges_unicycle,
            "necessary_pass": self.necessary_pass,
            "residual_indeterminate": self.residual_indeterminate,
            "conventions": self.conventions,
            "findings": self.findings,
        }


def census_row(G: Digraph, tight_cache: dict | None = None) -> CensusRow:
    """Classify one instance and record its per-instance statistics."""
    if tight_cache is None:
        tight_cache = {}
    verdict = classify_graph(G, tight_cache)
    findings = []
    unicycle_edges = set()
    for e, v in verdict.per_edge.items():
        if v.status == CRITICAL:
            unicycle_edges.add(e)
        elif v.reason == REASON_DEGRADED:
            # a unicycle edge must be nondegraded; check the claim instead
            # of assuming it
            w = find_unicycle_containing(G, e)
            if w is not None:
                unicycle_edges.add(e)
                findings.append(
                    f"degraded edge {e[0]}->{e[1]} lies in unicycle {sorted(w)}"
                )
    all_unicycle = unicycle_edges == set(G.edges)
    all_on_cycle = all(G.lies_on_directed_cycle(e) for e in G.edges)
    all_nondegraded = all(G.is_nondegraded_edge(e) for e in G.edges)
    if all_unicycle and not (all_on_cycle and all_nondegraded):
        findings.append("unicycle coverage without both necessary conditions")
    removable = False
    for e in G.edges:
        if e in unicycle_edges:
            continue
        removed = G.remove_edge(e)
        key = canonical_code(removed)
        if key not in tight_cache:
            tight_cache[key] = mais_tight_via_flcc(removed)
        if tight_cache[key]:
            removable = True
            break
    own_key = canonical_code(G)
    if own_key not in tight_cache:
        tight_cache[own_key] = mais_tight_via_flcc(G)
    statuses = [v.status for v in verdict.per_edge.values()]
    return CensusRow(
        canonical=str(canonical_code(G)),
        n=G.n,
        edges=len(G.edges),
        strongly_connected=G.is_strongly_connected(),
        all_on_cycle=all_on_cycle,
        all_nondegraded=all_nondegraded,
        all_edges_unicycle=all_unicycle,
        removable_edge=removable,
        outer_bound_tight=tight_cache[own_key],
        graph_status=verdict.graph_status,
        vacuous=verdict.vacuous,
        critical_edges=statuses.count(CRITICAL),
        noncritical_edges=statuses.count(NONCRITICAL),
        indeterminate_edges=statuses.count(INDETERMINATE),
        findings=findings,
    )


_WORKER_CACHE: dict = {}


def _census_row_packed(item: tuple[int, int]) -> CensusRow:
    n, code = item
    return census_row(unpack_digraph(n, code), _WORKER_CACHE)


def run_census(
    n: int, include_vacuous: bool = True, workers: int = 1
) -> tuple[CensusReport, list[CensusRow]]:
    """Classify all non-isomorphic n-node instances and aggregate counts.

    Rows come back in ascending canonical-code order and every count is a
    commutative tally, so the report is identical for any worker count.
    """
    if not 1 <= n <= CENSUS_NODE_LIMIT:
        raise GraphError(f"census supported for 1 <= n <= {CENSUS_NODE_LIMIT}")
    items = [(n, int(code)) for code in enumerate_canonical_codes(n)]
    if workers <= 1:
        cache: dict = {}
        rows = [census_row(unpack_digraph(nn, code), cache) for nn, code in items]
    else:
        chunk = max(1, len(items) // (workers * 16))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_census_row_packed, items, chunksize=chunk))
    return summarize(rows, include_vacuous), rows


def _scoped_counts(rows: list[CensusRow], pred) -> dict[str, int]:
    return {
        "with_vacuous": sum(1 for r in rows if pred(r)),
        "without_vacuous": sum(1 for r in rows if pred(r) and not r.vacuous),
        "strongly_connected": sum(
            1 for r in rows if pred(r) and r.strongly_connected
        ),
    }


def summarize(rows: list[CensusRow], include_vacuous: bool = True) -> CensusReport:
    n = rows[0].n if rows else 0
    residual = sum(1 for r in rows if r.indeterminate_edges > 0)
    findings = [f for r in rows for f in r.findings]

    def necessary(r):
        return r.all_on_cycle and r.all_nondegraded

    alternatives = {
        "all_edges_unicycle": _scoped_counts(rows, lambda r: r.all_edges_unicycle),
        "necessary_pass": {
            "necessary_only": _scoped_counts(rows, necessary),
            "with_tightness_elimination": _scoped_counts(
                rows, lambda r: necessary(r) and not r.removable_edge
            ),
            "tightness_elimination_only": _scoped_counts(
                rows, lambda r: not r.removable_edge
            ),
            "unicycle_cover_or_outer_bound_not_tight": _scoped_counts(
                rows, lambda r: r.all_edges_unicycle or not r.outer_bound_tight
            ),
        },
    }
    key = "with_vacuous" if include_vacuous else "without_vacuous"
    return CensusReport(
        n=n,
        total=len(rows),
        include_vacuous=include_vacuous,
        all_edges_unicycle=alternatives["all_edges_unicycle"][key],
        necessary_pass=alternatives["necessary_pass"]["necessary_only"][key],
        residual_indeterminate=residual,
        conventions={
            "include_vacuous": include_vacuous,
            "necessary_filter": "necessary_only",
            "alternatives": alternatives,
        },
        findings=findings,
    )


def write_reports(
    rows: list[CensusRow],
    report: CensusReport,
    out_path: str | None = None,
    summary_path: str | None = None,
) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            for row in rows:
                fh.write(json.dumps(row.to_json()) + "\n")
    if summary_path:
        with open(summary_path, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
