"""Text formats for graph instances.

Two formats, auto-detected by the first meaningful token:

side-information format          edge-list format
    n 3                              1 -> 2
    1: 2 3                           2 -> 1
    2: 1                             1 -> 3
    3: 1 2

The side-information format declares the node count and then one line per
receiver listing what it holds (an empty list is allowed).  The edge-list
format infers the node count from the largest label.  Both reject duplicate
edges and self-loops, with line numbers in every diagnostic.
"""

from __future__ import annotations

import re

from .graphs import Digraph


class ParseError(ValueError):
    """Malformed graph text; message carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str) -> Digraph:
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    meaningful = [(no, line) for no, line in lines if line]
    if not meaningful:
        raise ParseError(0, "empty input")
    first_no, first = meaningful[0]
    if first.split()[0] == "n":
        return _parse_side_info(meaningful)
    if "->" in first:
        return _parse_edge_list(meaningful)
    raise ParseError(first_no, "expected 'n <count>' or 'i -> j'")


def parse_graph_file(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _int(token: str, line_no: int, what: str) -> int:
    if not re.fullmatch(r"-?\d+", token):
        raise ParseError(line_no, f"{what}: {token!r} is not an integer")
    return int(token)


def _parse_side_info(lines) -> Digraph:
    head_no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(head_no, "header must be 'n <count>'")
    n = _int(parts[1], head_no, "node count")
    if n < 0:
        raise ParseError(head_no, "node count must be nonnegative")
    side: dict[int, list[int]] = {}
    edges_seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for no, line in lines[1:]:
        m = re.fullmatch(r"(\S+)\s*:\s*(.*)", line)
        if m is None:
            raise ParseError(no, "expected '<receiver>: <held messages>'")
        j = _int(m.group(1), no, "receiver label")
        if not 1 <= j <= n:
            raise ParseError(no, f"receiver {j} out of range 1..{n}")
        if j in side:
            raise ParseError(no, f"receiver {j} listed twice")
        held = []
        for token in m.group(2).split():
            i = _int(token, no, "message label")
            if i == j:
                raise ParseError(no, f"receiver {j} cannot hold its own message")
            if not 1 <= i <= n:
                raise ParseError(no, f"message {i} out of range 1..{n}")
            if (i, j) in edges_seen:
                raise ParseError(no, f"duplicate edge {i} -> {j}")
            edges_seen.add((i, j))
            held.append(i)
            edges.append((i, j))
        side[j] = held
    missing = [j for j in range(1, n + 1) if j not in side]
    if missing:
        raise ParseError(
            lines[-1][0], f"missing side-information lines for receivers {missing}"
        )
    return Digraph.from_edges(n, edges)


def _parse_edge_list(lines) -> Digraph:
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for no, line in lines:
        m = re.fullmatch(r"(\S+)\s*->\s*(\S+)", line)
        if m is None:
            raise ParseError(no, "expected 'i -> j'")
        i = _int(m.group(1), no, "source label")
        j = _int(m.group(2), no, "target label")
        if i == j:
            raise ParseError(no, f"self-loop {i} -> {j}")
        if i < 1 or j < 1:
            raise ParseError(no, "labels must be positive")
        if (i, j) in seen:
            raise ParseError(no, f"duplicate edge {i} -> {j}")
        seen.add((i, j))
        edges.append((i, j))
    n = max(max(i, j) for i, j in edges)
    return Digraph.from_edges(n, edges)


def format_graph(G: Digraph) -> str:
    """Canonical side-information serialization; parses back to the same graph."""
    if G.labels != tuple(range(1, G.n + 1)):
        raise ValueError("serialization needs nodes labeled 1..n")
    out = [f"n {G.n}"]
    for j in G.labels:
        held = " ".join(str(i) for i in sorted(G.side_info(j)))
        out.append(f"{j}:{' ' + held if held else ''}")
    return "\n".join(out) + "\n"
