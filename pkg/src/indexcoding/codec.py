"""Scalar linear XOR codes over induced cycles, with exhaustive verification.

A unicycle on S admits a simple broadcast code: XOR each consecutive message
pair along the cycle, skipping one cycle edge, for a total of (|S|-1) blocks
of t bits.  Each receiver on the cycle knows its predecessor's message and
unchains its own; the receiver across the skipped edge XORs the whole chain.
The resulting rates are t/( (|S|-1) t ) = 1/(|S|-1) on S and zero elsewhere.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .graphs import Digraph, GraphError
from .criticality import unicycle_order

VERIFY_BIT_LIMIT = 20
SAMPLE_CHECKS = 10_000


@dataclass(frozen=True)
class DecodePlan:
    """How one receiver reconstructs its message from the index word."""

    transmission_ids: tuple[int, ...]  # blocks of the word to XOR together
    side_nodes: tuple[int, ...]  # own side-information messages to XOR in


@dataclass(frozen=True)
class IndexCode:
    message_lengths: tuple[int, ...]  # bits per message, node order
    block_size: int  # bits per transmitted block
    transmissions: tuple[tuple[int, int], ...]  # XOR pairs (a, b) of node labels
    plans: dict[int, DecodePlan]

    @property
    def index_length(self) -> int:
        return self.block_size * len(self.transmissions)

    def encode(self, messages: tuple[int, ...]) -> int:
        """Concatenate the XOR blocks, first transmission in the low bits."""
        word = 0
        for pos, (a, b) in enumerate(self.transmissions):
            block = messages[a - 1] ^ messages[b - 1]
            word |= block << (pos * self.block_size)
        return word

    def decode(self, j: int, word: int, side: dict[int, int]) -> int:
        plan = self.plans.get(j)
        if plan is None:
            return 0
        t = self.block_size
        val = 0
        for pos in plan.transmission_ids:
            val ^= (word >> (pos * t)) & ((1 << t) - 1)
        for node in plan.side_nodes:
            val ^= side[node]
        return val

    def transmissions_symbolic(self) -> list[str]:
        return [f"x{a}+x{b}" for a, b in self.transmissions]

    def drop_last_transmission(self) -> IndexCode:
        """A broken variant for negative tests: plans are left stale."""
        if not self.transmissions:
            raise GraphError("no transmission to drop")
        return replace(self, transmissions=self.transmissions[:-1])


def build_cycle_code(G: Digraph, nodes, t: int = 1) -> IndexCode:
    """Code achieving rate 1/(|S|-1) on every node of an induced unicycle."""
    if t < 1:
        raise GraphError("blocks need at least one bit")
    nodes = frozenset(nodes)
    order = unicycle_order(G, nodes)  # raises unless a unicycle
    k = len(order)
    # skip the lexicographically largest cycle edge; rotate it to the seam
    cycle_edges = [(order[a], order[(a + 1) % k]) for a in range(k)]
    skip = cycle_edges.index(max(cycle_edges))
    order = order[skip + 1:] + order[: skip + 1]
    transmissions = tuple((order[a], order[a + 1]) for a in range(k - 1))
    plans: dict[int, DecodePlan] = {}
    for a in range(k - 1):
        plans[order[a + 1]] = DecodePlan((a,), (order[a],))
    plans[order[0]] = DecodePlan(tuple(range(k - 1)), (order[-1],))
    lengths = tuple(t if v in nodes else 0 for v in G.labels)
    return IndexCode(lengths, t, transmissions, plans)


def verify_code(code: IndexCode, G: Digraph, rng_seed: int = 0) -> bool:
    """Exhaustively check the decoding contract for every message tuple.

    A seeded random sample runs first so that broken codes fail fast; the
    full sweep over the message space follows.  Plans that read messages
    outside a receiver's side information set fail the contract outright.
    """
    total_bits = sum(code.message_lengths)
    if total_bits > VERIFY_BIT_LIMIT:
        raise GraphError(f"message space over 2^{VERIFY_BIT_LIMIT}, refusing exhaustive sweep")
    if len(code.message_lengths) != G.n:
        return False
    for j, plan in code.plans.items():
        allowed = G.side_info(j)
        if any(v not in allowed for v in plan.side_nodes):
            return False
        if any(not 0 <= p < len(code.transmissions) for p in plan.transmission_ids):
            return False

    side_sets = {j: sorted(G.side_info(j)) for j in G.labels}

    def check(messages: tuple[int, ...]) -> bool:
        word = code.encode(messages)
        for j in G.labels:
            if code.message_lengths[j - 1] == 0:
                continue
            side = {v: messages[v - 1] for v in side_sets[j]}
            if code.decode(j, word, side) != messages[j - 1]:
                return False
        return True

    spaces = [range(1 << t) for t in code.message_lengths]
    if (1 << total_bits) > SAMPLE_CHECKS:
        rng = random.Random(rng_seed)
        for _ in range(SAMPLE_CHECKS):
            sample = tuple(rng.randrange(1 << t) for t in code.message_lengths)
            if not check(sample):
                return False
    return all(check(messages) for messages in itertools.product(*spaces))


def achieved_rates(code: IndexCode) -> tuple[Fraction, ...]:
    """Rate tuple t_j / r as exact fractions."""
    r = code.index_length
    if r < 1:
        raise GraphError("code transmits nothing; rates undefined")
    return tuple(Fraction(t, r) for t in code.message_lengths)
