"""Acceptance suite: one test per numbered criterion, each printing a
PASS/FAIL line (run with ``pytest -s`` to see them on success).

The heavyweight artifacts (the full 5-node census, the 4-node edge sweep,
the ring-structured family) are computed once per session and shared.
"""

import itertools
import random
import time
from fractions import Fraction as F

import pytest

from indexcoding.bounds import (
    flcc_achievable,
    flcc_verify,
    mais_region,
    mais_shrinks_on_removal,
)
from indexcoding.canon import canonical_code, enumerate_nonisomorphic
from indexcoding.census import run_census
from indexcoding.circular import (
    chain_pair_weights,
    construct_rho,
    has_proper_side_info,
    ring_neighbors,
)
from indexcoding.codec import achieved_rates, build_cycle_code, verify_code
from indexcoding.criticality import (
    CRITICAL,
    INDETERMINATE,
    augmented_ring,
    blow_up_cliques,
    classify_edge,
    edges_in_unicycles,
    find_unicycle_containing,
)
from indexcoding.graphs import Digraph
from indexcoding.lp import LPProblem, check_solution, lp_feasible, lp_maximize
from indexcoding.regions import RateRegion

from oracles import (
    count_nonisomorphic_digraphs,
    lp_feasible_brute,
    lp_max_brute,
    sympy_region_vertices,
)

CENSUS_BUDGET_SECONDS = 600


def report(k, ok, detail):
    line = f"ACCEPTANCE {k} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    return line


@pytest.fixture(scope="session")
def census5():
    start = time.monotonic()
    summary, rows = run_census(5, include_vacuous=True, workers=2)
    elapsed = time.monotonic() - start
    return summary, rows, elapsed


@pytest.fixture(scope="session")
def sweep4():
    """Per-edge unicycle witnesses and outer-bound shrink verdicts, all 218."""
    records = []
    for G in enumerate_nonisomorphic(4):
        for e in sorted(G.edges):
            witness = find_unicycle_containing(G, e)
            shrank, _ = mais_shrinks_on_removal(G, e)
            records.append((G, e, witness, shrank))
    return records


@pytest.fixture(scope="session")
def ring_family():
    """One representative per isomorphism class of ring-structured graphs
    (side information within ring neighbors, someone strictly short of both),
    for 3 <= n <= 6."""
    family = {}
    for n in (3, 4, 5, 6):
        reps = {}
        per_node = []
        for j in range(1, n + 1):
            nb = sorted(ring_neighbors(n, j))
            per_node.append(
                [
                    frozenset(c)
                    for r in range(len(nb) + 1)
                    for c in itertools.combinations(nb, r)
                ]
            )
        for assign in itertools.product(*per_node):
            G = Digraph.from_side_info(assign)
            if not has_proper_side_info(G):
                continue
            key = canonical_code(G)
            if key not in reps:
                reps[key] = G
        family[n] = list(reps.values())
    return family


def test_criterion_01_census_totals(census5):
    for n, expected in ((1, 1), (2, 3), (3, 16), (4, 218)):
        assert count_nonisomorphic_digraphs(n) == expected
        assert len(enumerate_nonisomorphic(n)) == expected
    summary, _, elapsed = census5
    assert summary.total == 9608
    assert elapsed < CENSUS_BUDGET_SECONDS, f"census took {elapsed:.0f}s"
    report(1, True, f"totals 1,3,16,218,9608 exact; 5-node census in {elapsed:.0f}s")


def test_criterion_02_unicycle_coverage_count(census5):
    summary, _, _ = census5
    alts = summary.conventions["alternatives"]["all_edges_unicycle"]
    match = [scope for scope, count in alts.items() if count == 115]
    assert match, (
        "no documented convention reproduces the published unicycle-coverage "
        f"count 115; computed: {alts}"
    )
    assert alts["strongly_connected"] == 115
    assert summary.findings == []
    necessary = summary.conventions["alternatives"]["necessary_pass"]["necessary_only"]
    for scope, count in alts.items():
        assert count <= necessary[scope]
    report(
        2,
        True,
        f"all-edges-in-unicycles = 115 under the '{match[0]}' convention "
        f"(full table: {alts})",
    )


def test_criterion_03_necessary_condition_count(census5):
    summary, _, _ = census5
    alts = summary.conventions["alternatives"]["necessary_pass"]
    flat = {
        f"{filt}/{scope}": count
        for filt, scopes in alts.items()
        for scope, count in scopes.items()
    }
    matches = [k for k, v in flat.items() if v == 411]
    if matches:
        report(3, True, f"necessary_pass = 411 under {matches[0]}")
        return
    detail = (
        "no enumerated convention yields the published candidate count 411. "
        f"Computed table: {flat}. "
        "The per-edge necessary conditions alone leave 1060 strongly "
        "connected candidates (1096 overall); adding the tightness "
        "elimination certified by the clique-covering inner bound leaves "
        "211 (235 overall); elimination alone leaves 460; keeping instances "
        "that are fully unicycle-covered or whose own outer bound is not "
        "certified tight leaves 428. The two closest reconstructions (460 "
        "and 428) would both shrink toward 411 under a tightness certifier "
        "stronger than the clique-covering bound, which is outside this "
        "tool's scope."
    )
    report(3, False, detail)
    raise AssertionError(detail)


def test_criterion_04_unicycle_iff_outer_bound_shrinks(sweep4):
    exceptions = [
        (G, e)
        for G, e, witness, shrank in sweep4
        if (witness is not None) != shrank
    ]
    assert exceptions == []
    hits = sum(1 for _, _, w, _ in sweep4 if w is not None)
    report(
        4,
        True,
        f"witness existence matches outer-bound shrink on all {len(sweep4)} "
        f"edges of the 218 4-node instances ({hits} with witnesses)",
    )


def test_criterion_05_cycle_codes_certify_every_witness(sweep4):
    checked = 0
    for G, e, witness, _ in sweep4:
        if witness is None:
            continue
        code = build_cycle_code(G, witness, 1)
        assert verify_code(code, G)
        rates = achieved_rates(code)
        assert rates == tuple(
            F(1, len(witness) - 1) if j in witness else F(0) for j in G.labels
        )
        assert mais_region(G).region.contains(rates)
        assert not mais_region(G.remove_edge(e)).region.contains(rates)
        checked += 1
    report(
        5,
        True,
        f"{checked} unicycle witnesses certified by exhaustive decoding and "
        "separated the pre/post removal outer bounds",
    )


def _lp_certified(G, vertex, pool):
    """An exact inner-bound certificate via the LP route, reusing verified
    witnesses for dominated points (the LP's own witness re-verifies)."""
    for rho in pool:
        if flcc_verify(G, vertex, rho):
            return True
    ok, rho = flcc_achievable(G, vertex)
    if ok and flcc_verify(G, vertex, rho):
        pool.append(rho)
        return True
    return False


def test_criterion_06_ring_family_tightness_and_chain_sums(ring_family):
    vertices_checked = 0
    for n, graphs in ring_family.items():
        for G in graphs:
            pool = []
            for vertex in mais_region(G).region.vertices():
                rho = construct_rho(G, vertex)  # raises if it fails to certify
                assert flcc_verify(G, vertex, rho)
                assert _lp_certified(G, vertex, pool), (G, vertex)
                vertices_checked += 1

    rng = random.Random(2718)
    sums_checked = 0
    for k in range(1, 7):
        for _ in range(1000):
            rates = [F(rng.randint(0, 12), rng.randint(1, 12)) for _ in range(k + 1)]
            weights = chain_pair_weights(rates)
            for node in range(k + 1):
                incident = [weights[p] for p in (node - 1, node) if 0 <= p < k]
                assert sum(incident) >= rates[node]
            total = sum(weights)
            independent = {
                sum(rates[i] for i in sub)
                for r in range(k + 2)
                for sub in itertools.combinations(range(k + 1), r)
                if all(b - a > 1 for a, b in zip(sub, sub[1:]))
            }
            assert total in independent, (rates, weights)
            sums_checked += 1
    report(
        6,
        True,
        f"{vertices_checked} outer-bound vertices across "
        f"{sum(len(v) for v in ring_family.values())} ring-structured classes "
        f"certified by construction and by LP; no-adjacent-rates sum property "
        f"held on {sums_checked} random vectors",
    )


def test_criterion_07_ring_family_exact_classification(ring_family):
    cache = {}
    edges_checked = 0
    for n, graphs in ring_family.items():
        for G in graphs:
            covered = edges_in_unicycles(G)
            for e in sorted(G.edges):
                verdict = classify_edge(G, e, cache)
                assert verdict.status != INDETERMINATE, (G, e)
                assert (verdict.status == CRITICAL) == (e in covered), (G, e)
                edges_checked += 1
    report(
        7,
        True,
        f"no indeterminate verdicts and critical = unicycle membership on "
        f"{edges_checked} edges across the ring-structured family",
    )


def test_criterion_08_known_critical_families(sweep4):
    cache = {}
    mutual_checked = 0
    seen = set()
    for G, e, _, _ in sweep4:
        key = (canonical_code(G), e)
        if key in seen:
            continue
        seen.add(key)
        i, j = e
        if G.has_edge(j, i):
            assert classify_edge(G, e, cache).status == CRITICAL
            mutual_checked += 1

    generated = 0
    for n in (2, 3, 4, 5):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j, n + 1):
                    G = augmented_ring(n, i, j, k)
                    assert edges_in_unicycles(G) == G.edges, (n, i, j, k)
                    generated += 1

    blowups = 0
    for n in (2, 3, 4, 5):
        base_nodes = n + 1
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j, n + 1):
                    base = augmented_ring(n, i, j, k)
                    for total in range(base_nodes, 8):
                        for cuts in itertools.combinations(
                            range(1, total), base_nodes - 1
                        ):
                            sizes_list = [
                                b - a
                                for a, b in zip((0,) + cuts, cuts + (total,))
                            ]
                            sizes = dict(zip(base.labels, sizes_list))
                            big = blow_up_cliques(base, sizes)
                            assert edges_in_unicycles(big) == big.edges, (
                                n, i, j, k, sizes,
                            )
                            blowups += 1
    report(
        8,
        True,
        f"{mutual_checked} mutual edges critical across 4-node instances; "
        f"{generated} ring-plus-hub instances and {blowups} clique blow-ups "
        "fully unicycle-covered",
    )


def test_criterion_09_reference_instance_regression(fig1, capsys):
    from indexcoding import cli

    import json
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".graph", delete=False) as fh:
        fh.write("n 3\n1: 2 3\n2: 1\n3: 1 2\n")
        path = fh.name
    assert cli.main(["analyze", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    per_edge = {(e["from"], e["to"]): e for e in payload["edges"]}
    assert per_edge[(2, 3)]["status"] == "noncritical"
    assert per_edge[(2, 3)]["reason"] == "degraded_side_info"
    assert payload["symmetric_bounds"] == {"lower": "1/2", "upper": "1/2"}
    assert payload["mais"] == {
        "n": 3,
        "constraints": [[1], [2, 3]],
        "mais_number": 2,
    }
    assert payload["graph_status"] == "noncritical"
    report(
        9,
        True,
        "reference instance: degraded edge flagged, symmetric bounds 1/2, "
        "outer bound constraints {[1], [2, 3]}",
    )


def test_criterion_10_randomized_oracle_agreement():
    rng = random.Random(31415)

    lp_trials = 0
    for _ in range(1000):
        n = rng.randint(1, 3)
        rows = [
            (
                [F(rng.randint(-3, 3)) for _ in range(n)],
                rng.choice(["<=", ">=", "="]),
                F(rng.randint(-4, 6), rng.randint(1, 3)),
            )
            for _ in range(rng.randint(1, 3))
        ]
        for j in range(n):
            e = [F(0)] * n
            e[j] = F(1)
            rows.append((e, "<=", F(4)))
        obj = [F(rng.randint(-3, 3)) for _ in range(n)]
        prob = LPProblem.build(n, rows, obj)
        mine, witness = lp_feasible(prob)
        assert mine == lp_feasible_brute(prob)
        if mine:
            assert check_solution(prob, witness)
            value, attained = lp_maximize(prob)
            assert value == lp_max_brute(prob)
            assert check_solution(prob, attained)
        lp_trials += 1

    def random_covering_region(n):
        sets = [
            frozenset(rng.sample(range(1, n + 1), rng.randint(1, n)))
            for _ in range(rng.randint(1, 4))
        ]
        covered = set().union(*sets)
        sets += [frozenset({j}) for j in range(1, n + 1) if j not in covered]
        return RateRegion.from_sets(n, sets)

    compare_trials = 0
    for _ in range(1000):
        n = rng.randint(1, 4)
        a, b = random_covering_region(n), random_covering_region(n)
        by_vertices = all(b.contains(v) for v in a.vertices())
        assert a.is_subset_of(b) == by_vertices
        properly = a.is_subset_of(b) and not b.is_subset_of(a)
        assert a.proper_subset_of(b) == properly
        compare_trials += 1

    vertex_trials = 0
    for _ in range(1000):
        n = rng.randint(1, 4)
        sets = [
            frozenset(rng.sample(range(1, n + 1), rng.randint(1, n)))
            for _ in range(rng.randint(0, 5))
        ]
        reg = RateRegion.from_sets(n, sets)
        assert set(reg.vertices()) == sympy_region_vertices(
            n, [set(s) for s in reg.constraints]
        )
        vertex_trials += 1

    report(
        10,
        True,
        f"zero disagreements across {lp_trials} LP, {compare_trials} region "
        f"comparison and {vertex_trials} vertex enumeration oracle trials",
    )
