"""Rate-region polytopes in H-representation.

A region is ``{R >= 0 : sum_{j in S} R_j <= 1 for S in family}`` over
coordinates 1..n.  The family is kept antichain-reduced: a constraint on a
superset implies the constraint on every subset, so only maximal sets
matter.  Because every constraint has unit coefficients and right-hand side
one, region comparison reduces to a set-containment test on the families,
and vertex enumeration can work support by support with small integer
linear algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import bits_of

VERTEX_DIMENSION_LIMIT = 8

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _solve_int_square(a: list[list[int]], b: list[int]) -> list[Fraction] | None:
    """Solve a small integer square system exactly; None if singular.

    Fraction-free (Bareiss) elimination keeps all intermediates integral,
    which is much faster than Fraction arithmetic for the 0/1 systems that
    vertex enumeration produces.
    """
    n = len(a)
    if n == 0:
        return []
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), -1)
        if piv < 0:
            return None
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        mkk = m[k][k]
        for r in range(k + 1, n):
            mrk = m[r][k]
            row_r, row_k = m[r], m[k]
            for c in range(k + 1, n + 1):
                row_r[c] = (row_r[c] * mkk - mrk * row_k[c]) // prev
            row_r[k] = 0
        prev = mkk
    x: list[Fraction] = [_ZERO] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for j in range(i + 1, n):
            s -= m[i][j] * x[j]
        x[i] = s / m[i][i]
    return x


@dataclass(frozen=True)
class RateRegion:
    """Antichain-reduced family of unit-sum constraints over 1..n."""

    n: int
    constraints: frozenset[frozenset[int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be nonnegative")
        sets = []
        for s in self.constraints:
            s = frozenset(s)
            if not s:
                raise ValueError("empty constraint set")
            if not all(1 <= j <= self.n for j in s):
                raise ValueError(f"constraint {sorted(s)} outside 1..{self.n}")
            sets.append(s)
        maximal = frozenset(
            s for s in sets if not any(s < t for t in sets)
        )
        object.__setattr__(self, "constraints", maximal)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> RateRegion:
        return cls(n, frozenset(frozenset(s) for s in sets))

    # ------------------------------------------------------------------

    def _check_dim(self, other: RateRegion) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")

    def contains(self, rates: Sequence[Fraction]) -> bool:
        """Exact membership of a rate tuple (1-based coordinate j at rates[j-1])."""
        if len(rates) != self.n:
            raise ValueError(f"rate tuple has {len(rates)} entries, region has {self.n}")
        rates = [Fraction(r) for r in rates]
        if any(r < 0 for r in rates):
            return False
        return all(sum((rates[j - 1] for j in s), _ZERO) <= 1 for s in self.constraints)

    def is_subset_of(self, other: RateRegion) -> bool:
        """Point-set containment, decided combinatorially.

        With unit coefficients and unit right-hand sides, self <= other holds
        iff every constraint set of ``other`` is contained in some constraint
        set of ``self``: the forward direction is monotonicity, and when some
        T of ``other`` is covered by no S of ``self`` the point that spreads
        1/max|S . T| over T lies in ``self`` but violates T.
        """
        self._check_dim(other)
        return all(
            any(t <= s for s in self.constraints) for t in other.constraints
        )

    def proper_subset_of(self, other: RateRegion) -> bool:
        self._check_dim(other)
        return self.is_subset_of(other) and not other.is_subset_of(self)

    def __eq__(self, other):
        if not isinstance(other, RateRegion):
            return NotImplemented
        return self.n == other.n and self.constraints == other.constraints

    def __hash__(self):
        return hash((self.n, self.constraints))

    # ------------------------------------------------------------------

    @cached_property
    def _vertex_tuple(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.n
        if n > VERTEX_DIMENSION_LIMIT:
            raise ValueError(
                f"vertex enumeration limited to dimension {VERTEX_DIMENSION_LIMIT}"
            )
        cmasks = [
            sum(1 << (j - 1) for j in s) for s in self.constraints
        ]
        found: set[tuple[Fraction, ...]] = set()
        for support in range(1 << n):
            bits = list(bits_of(support))
            p = len(bits)
            restricted = sorted({cm & support for cm in cmasks} - {0})
            if len(restricted) < p:
                continue
            for combo in itertools.combinations(restricted, p):
                a = [[rm >> b & 1 for b in bits] for rm in combo]
                sol = _solve_int_square(a, [1] * p)
                if sol is None or any(v <= 0 for v in sol):
                    continue
                point = [_ZERO] * n
                for b, v in zip(bits, sol):
                    point[b] = v
                if all(
                    sum((point[j] for j in bits_of(cm)), _ZERO) <= 1 for cm in cmasks
                ):
                    found.add(tuple(point))
        return tuple(sorted(found))

    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        """All extreme points, exact, deduplicated, in ascending tuple order.

        Every vertex is recovered through its positive support: the zero
        coordinates plus |support| independent tight constraints pin it down,
        so scanning supports and solving the restricted square systems is
        exhaustive.
        """
        return self._vertex_tuple

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "constraints": sorted(sorted(s) for s in self.constraints),
        }
