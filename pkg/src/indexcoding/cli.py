"""Command-line interface: one verb per analysis, JSON (or text) reports.

Exit codes: 0 success, 1 input error (bad arguments, malformed files or
rationals), 2 internal assertion failure (an exact certificate the theory
guarantees failed to verify).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds, census, circular, codec, criticality
from .bounds import CertificationError
from .canon import canonical_code
from .graphio import ParseError, format_graph, parse_graph, parse_graph_file
from .graphs import Digraph, GraphError
from .lp import LPError


class CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we own the exit code
        raise CliInputError(message)


def _parse_rates(text: str, n: int) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise CliInputError(f"expected {n} comma-separated rates, got {len(parts)}")
    rates = []
    for p in parts:
        try:
            rates.append(Fraction(p))
        except (ValueError, ZeroDivisionError):
            raise CliInputError(f"malformed rational {p!r}") from None
    if any(r < 0 for r in rates):
        raise CliInputError("rates must be nonnegative")
    return tuple(rates)


def _parse_nodes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise CliInputError(f"malformed node list {text!r}") from None


def _load_graph(path: str) -> Digraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph_file(path)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _rho_json(rho) -> dict:
    return {
        ",".join(str(v) for v in sorted(s)): str(w) for s, w in sorted(
            rho.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))
        )
    }


# ----------------------------------------------------------------------
# verbs

def _edge_verdicts_json(verdict: criticality.GraphVerdict) -> list[dict]:
    out = []
    for (i, j), v in sorted(verdict.per_edge.items()):
        out.append(
            {
                "from": i,
                "to": j,
                "status": v.status,
                "reason": v.reason,
                "witness": sorted(v.witness) if v.witness is not None else None,
            }
        )
    return out


def cmd_analyze(args) -> dict:
    G = _load_graph(args.graph)
    verdict = criticality.classify_graph(G)
    payload: dict = {
        "graph": {"n": G.n, "side_info": {str(j): sorted(G.side_info(j)) for j in G.labels}},
        "edges": _edge_verdicts_json(verdict),
        "graph_status": verdict.graph_status,
        "vacuous": verdict.vacuous,
    }
    if G.n >= 1:
        bound = bounds.mais_region(G)
        lower, upper = bounds.symmetric_bounds(G)
        payload["mais"] = {**bound.region.to_json(), "mais_number": bound.mais_number}
        payload["symmetric_bounds"] = {"lower": str(lower), "upper": str(upper)}
        payload["cliques"] = [sorted(s) for s in G.cliques()]
    if G.n >= 1 and circular.is_circular_class(G):
        section = {
            "in_class": True,
            "proper_side_info": circular.has_proper_side_info(G),
            "membership_vacuously_wide": G.n == 3,
        }
        payload["circular"] = section
    certificates = []
    for (i, j), v in sorted(verdict.per_edge.items()):
        if v.status != criticality.CRITICAL:
            continue
        code = codec.build_cycle_code(G, v.witness, 1)
        certificates.append(
            {
                "edge": [i, j],
                "witness": sorted(v.witness),
                "transmissions": code.transmissions_symbolic(),
                "verified": codec.verify_code(code, G),
                "rates": [str(r) for r in codec.achieved_rates(code)],
            }
        )
    payload["codec_certificates"] = certificates
    return payload


def cmd_classify(args) -> dict:
    G = _load_graph(args.graph)
    verdict = criticality.classify_graph(G)
    return {
        "edges": _edge_verdicts_json(verdict),
        "graph_status": verdict.graph_status,
        "vacuous": verdict.vacuous,
    }


def cmd_mais(args) -> dict:
    G = _load_graph(args.graph)
    bound = bounds.mais_region(G)
    return {**bound.region.to_json(), "mais_number": bound.mais_number}


def cmd_flcc(args) -> dict:
    G = _load_graph(args.graph)
    rates = _parse_rates(args.rate, G.n)
    ok, rho = bounds.flcc_achievable(G, rates)
    payload = {"achievable": ok}
    if ok:
        payload["rho"] = _rho_json(rho)
    return payload


def cmd_circular(args) -> dict:
    G = _load_graph(args.graph)
    in_class = circular.is_circular_class(G)
    payload: dict = {"in_class": in_class}
    if G.n == 3:
        payload["membership_vacuously_wide"] = True
    if not in_class:
        if args.verify_tight or args.rho:
            raise CliInputError("graph is not in the ring-structured family")
        return payload
    payload["proper_side_info"] = circular.has_proper_side_info(G)
    payload["chains"] = [
        {"start": c.start, "length": c.length, "nodes": list(c.nodes)}
        for c in chains_or_empty(G)
    ]
    if args.verify_tight:
        payload["mais_tight"] = circular.verify_tightness(G)
    if args.rho:
        if not args.rate:
            raise CliInputError("--rho needs --rate")
        rates = _parse_rates(args.rate, G.n)
        rho = circular.construct_rho(G, rates)
        payload["rho"] = _rho_json(rho)
    return payload


def chains_or_empty(G: Digraph) -> list[circular.Chain]:
    try:
        return circular.chains(G)
    except GraphError:
        return []


def cmd_codec(args) -> dict:
    G = _load_graph(args.graph)
    subset = _parse_nodes(args.subset)
    code = codec.build_cycle_code(G, subset, args.bits)
    return {
        "subset": sorted(subset),
        "bits": args.bits,
        "transmissions": code.transmissions_symbolic(),
        "index_length": code.index_length,
        "verified": codec.verify_code(code, G),
        "rates": [str(r) for r in codec.achieved_rates(code)],
    }


def cmd_census(args) -> dict:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("INDEXCODING_WORKERS", "1"))
    include_vacuous = args.include_vacuous == "true"
    report, rows = census.run_census(
        args.nodes, include_vacuous=include_vacuous, workers=workers
    )
    census.write_reports(rows, report, args.out, args.summary)
    return report.to_json()


def cmd_gen(args) -> dict | str:
    G = criticality.augmented_ring(args.nodes, args.i, args.j, args.k)
    if args.blow_up:
        sizes = {}
        for part in args.blow_up.split(","):
            try:
                node, size = part.split(":")
                sizes[int(node)] = int(size)
            except ValueError:
                raise CliInputError(f"malformed blow-up entry {part!r}") from None
        for v in G.labels:
            sizes.setdefault(v, 1)
        G = criticality.blow_up_cliques(G, sizes)
    if args.format == "text":
        return format_graph(G)
    return {
        "n": G.n,
        "side_info": {str(j): sorted(G.side_info(j)) for j in G.labels},
        "canonical": str(canonical_code(G)),
    }


# ----------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="indexcoding", description=__doc__)
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("analyze", cmd_analyze, help="full report: bounds, verdicts, certificates")
    p.add_argument("graph", help="graph file path, or - for stdin")

    p = add("classify", cmd_classify, help="per-edge criticality verdicts")
    p.add_argument("graph")

    p = add("mais", cmd_mais, help="acyclic-set outer bound")
    p.add_argument("graph")

    p = add("flcc", cmd_flcc, help="clique-covering achievability of a rate tuple")
    p.add_argument("graph")
    p.add_argument("--rate", required=True, help="comma-separated rationals, e.g. 1,1/2,0")

    p = add("circular", cmd_circular, help="ring-structured family analyses")
    p.add_argument("graph")
    p.add_argument("--check-class", action="store_true", dest="check_class")
    p.add_argument("--verify-prop7", action="store_true", dest="verify_tight",
                   help="certify every outer-bound vertex achievable")
    p.add_argument("--rho", action="store_true", help="construct weights for --rate")
    p.add_argument("--rate")

    p = add("codec", cmd_codec, help="cycle code over an induced unicycle")
    p.add_argument("graph")
    p.add_argument("--subset", required=True, help="comma-separated node labels")
    p.add_argument("--bits", type=int, default=1)

    p = add("census", cmd_census, help="classify all instances of a given size")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--out", help="per-instance JSON-lines path")
    p.add_argument("--summary", help="summary JSON path")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default $INDEXCODING_WORKERS or 1)")
    p.add_argument("--include-vacuous", choices=("true", "false"), default="true",
                   dest="include_vacuous")

    p = add("gen-prop4", cmd_gen, help="generate a ring-plus-hub critical instance")
    p.add_argument("--nodes", type=int, required=True, help="ring size")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--blow-up", dest="blow_up",
                   help="cluster sizes, e.g. 1:2,3:2 (unlisted nodes stay single)")
    return parser


def _render_text(payload, indent: str = "") -> str:
    lines = []
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_render_text(v, indent + "  "))
            else:
                shown = v if not isinstance(v, (dict, list)) else "(none)"
                lines.append(f"{indent}{str(k).ljust(width)}  {shown}")
    elif isinstance(payload, list):
        if payload and all(isinstance(v, dict) for v in payload):
            keys = list(payload[0])
            rows = [[str(_jsonable(v.get(k))) for k in keys] for v in payload]
            widths = [
                max(len(k), max((len(r[c]) for r in rows), default=0))
                for c, k in enumerate(keys)
            ]
            lines.append(indent + "  ".join(k.ljust(w) for k, w in zip(keys, widths)))
            for r in rows:
                lines.append(indent + "  ".join(x.ljust(w) for x, w in zip(r, widths)))
        else:
            for v in payload:
                lines.append(f"{indent}- {v}")
    else:
        lines.append(f"{indent}{payload}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, GraphError, LPError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CertificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if isinstance(payload, str):
        sys.stdout.write(payload)
    elif args.format == "text":
        print(_render_text(_jsonable(payload)))
    else:
        print(json.dumps(_jsonable(payload), indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
