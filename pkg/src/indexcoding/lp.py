"""Exact rational linear programming.

A two-phase primal simplex over `fractions.Fraction`, with Bland's
lowest-index anti-cycling rule, so every verdict is exact and the pivot
sequence provably terminates.  Problems are small (dozens of variables),
so a dense tableau is the right tool; no floating point is ever involved.

Variables are implicitly nonnegative.  Rows are (coefficients, relation,
right-hand side) with relation one of '<=', '>=', '='.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

RELATIONS = ("<=", ">=", "=")
PIVOT_LIMIT = 200_000  # far above anything a census-sized problem needs

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LPError(ValueError):
    """Malformed problem or an internal solver invariant failure."""


class LPInfeasible(LPError):
    pass


class LPUnbounded(LPError):
    pass


@dataclass(frozen=True)
class LPRow:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LPProblem:
    num_vars: int
    rows: tuple[LPRow, ...]
    objective: tuple[Fraction, ...] | None = None

    @classmethod
    def build(cls, num_vars, rows, objective=None) -> LPProblem:
        built = []
        for coeffs, relation, rhs in rows:
            coeffs = tuple(Fraction(c) for c in coeffs)
            if len(coeffs) != num_vars:
                raise LPError(f"row width {len(coeffs)} != {num_vars} variables")
            if relation not in RELATIONS:
                raise LPError(f"unknown relation {relation!r}")
            built.append(LPRow(coeffs, relation, Fraction(rhs)))
        obj = None
        if objective is not None:
            obj = tuple(Fraction(c) for c in objective)
            if len(obj) != num_vars:
                raise LPError("objective width mismatch")
        return cls(num_vars, tuple(built), obj)


class _Tableau:
    """Dense simplex tableau kept in canonical (basic columns = identity) form."""

    def __init__(self, problem: LPProblem):
        nv = problem.num_vars
        rows = []
        for row in problem.rows:
            coeffs, rel, rhs = list(row.coeffs), row.relation, row.rhs
            if rhs < 0:
                coeffs = [-c for c in coeffs]
                rhs = -rhs
                rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
            rows.append((coeffs, rel, rhs))

        slack_count = sum(1 for _, rel, _ in rows if rel != "=")
        ncols = nv + slack_count
        self.matrix: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        self.artificials: list[int] = []

        slack_at = nv
        need_artificial = []
        for coeffs, rel, rhs in rows:
            line = [Fraction(c) for c in coeffs] + [_ZERO] * slack_count
            if rel == "<=":
                line[slack_at] = _ONE
                self.basis.append(slack_at)
                need_artificial.append(False)
                slack_at += 1
            elif rel == ">=":
                line[slack_at] = -_ONE
                self.basis.append(-1)  # artificial assigned below
                need_artificial.append(True)
                slack_at += 1
            else:
                self.basis.append(-1)
                need_artificial.append(True)
            self.matrix.append(line)
            self.rhs.append(rhs)

        for i, needed in enumerate(need_artificial):
            if needed:
                for line in self.matrix:
                    line.append(_ZERO)
                self.matrix[i][ncols] = _ONE
                self.basis[i] = ncols
                self.artificials.append(ncols)
                ncols += 1
        self.ncols = ncols
        self.num_vars = nv
        self.pivots = 0

    def _pivot(self, row: int, col: int) -> None:
        self.pivots += 1
        if self.pivots > PIVOT_LIMIT:
            raise LPError("pivot limit exceeded; anti-cycling invariant broken")
        piv = self.matrix[row][col]
        inv = _ONE / piv
        line = self.matrix[row]
        for c in range(self.ncols):
            if line[c]:
                line[c] *= inv
        self.rhs[row] *= inv
        for r, other in enumerate(self.matrix):
            if r == row:
                continue
            factor = other[col]
            if factor:
                for c in range(self.ncols):
                    if line[c]:
                        other[c] -= factor * line[c]
                self.rhs[r] -= factor * self.rhs[row]
        if self.cost[col]:
            factor = self.cost[col]
            for c in range(self.ncols):
                if line[c]:
                    self.cost[c] -= factor * line[c]
        self.basis[row] = col

    def _reduced_costs(self, cost: list[Fraction]) -> None:
        self.cost = list(cost)
        for r, b in enumerate(self.basis):
            factor = self.cost[b]
            if factor:
                line = self.matrix[r]
                for c in range(self.ncols):
                    if line[c]:
                        self.cost[c] -= factor * line[c]

    def _minimize(self, allowed_cols: int) -> None:
        """Run simplex to optimality (minimization, Bland's rule)."""
        while True:
            enter = -1
            for c in range(allowed_cols):
                if self.cost[c] < 0:
                    enter = c
                    break
            if enter < 0:
                return
            leave = -1
            best = None
            for r, line in enumerate(self.matrix):
                a = line[enter]
                if a > 0:
                    ratio = self.rhs[r] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[r] < self.basis[leave]
                    ):
                        best = ratio
                        leave = r
            if leave < 0:
                raise LPUnbounded("objective unbounded above")
            self._pivot(leave, enter)

    def run_phase1(self) -> Fraction:
        cost = [_ZERO] * self.ncols
        for a in self.artificials:
            cost[a] = _ONE
        self._reduced_costs(cost)
        self._minimize(self.ncols)
        value = sum(
            (self.rhs[r] for r, b in enumerate(self.basis) if b in set(self.artificials)),
            _ZERO,
        )
        return value

    def drop_artificials(self) -> None:
        """Pivot artificials out of the basis (or drop redundant rows)."""
        art = set(self.artificials)
        r = 0
        while r < len(self.matrix):
            if self.basis[r] in art:
                col = next(
                    (
                        c
                        for c in range(self.ncols)
                        if c not in art and self.matrix[r][c] != 0
                    ),
                    -1,
                )
                if col < 0:  # all-zero row: redundant constraint
                    del self.matrix[r]
                    del self.rhs[r]
                    del self.basis[r]
                    continue
                self._pivot(r, col)
            r += 1
        keep = [c for c in range(self.ncols) if c not in art]
        remap = {c: k for k, c in enumerate(keep)}
        self.matrix = [[line[c] for c in keep] for line in self.matrix]
        self.basis = [remap[b] for b in self.basis]
        self.ncols = len(keep)
        self.artificials = []

    def run_phase2(self, objective: Sequence[Fraction]) -> None:
        cost = [-Fraction(c) for c in objective] + [_ZERO] * (self.ncols - self.num_vars)
        self._reduced_costs(cost)
        self._minimize(self.ncols)

    def solution(self) -> tuple[Fraction, ...]:
        x = [_ZERO] * self.ncols
        for r, b in enumerate(self.basis):
            x[b] = self.rhs[r]
        return tuple(x[: self.num_vars])


def lp_feasible(problem: LPProblem) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Exact phase-one verdict; on success also a witness satisfying every row."""
    if problem.num_vars == 0:
        ok = all(_row_holds((), row) for row in problem.rows)
        return ok, (() if ok else None)
    tab = _Tableau(problem)
    if tab.run_phase1() > 0:
        return False, None
    return True, tab.solution()


def lp_maximize(problem: LPProblem) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact optimum and attaining witness; raises on infeasible/unbounded."""
    if problem.objective is None:
        raise LPError("problem has no objective")
    if problem.num_vars == 0:
        if all(_row_holds((), row) for row in problem.rows):
            return _ZERO, ()
        raise LPInfeasible("no feasible point")
    tab = _Tableau(problem)
    if tab.run_phase1() > 0:
        raise LPInfeasible("no feasible point")
    tab.drop_artificials()
    tab.run_phase2(problem.objective)
    x = tab.solution()
    value = sum((c * v for c, v in zip(problem.objective, x)), _ZERO)
    return value, x


def check_solution(problem: LPProblem, x: Sequence[Fraction]) -> bool:
    """Exact check that ``x`` is nonnegative and satisfies every row."""
    if len(x) != problem.num_vars:
        return False
    if any(v < 0 for v in x):
        return False
    return all(_row_holds(x, row) for row in problem.rows)


def _row_holds(x: Sequence[Fraction], row: LPRow) -> bool:
    lhs = sum((c * v for c, v in zip(row.coeffs, x)), _ZERO)
    if row.relation == "<=":
        return lhs <= row.rhs
    if row.relation == ">=":
        return lhs >= row.rhs
    return lhs == row.rhs
