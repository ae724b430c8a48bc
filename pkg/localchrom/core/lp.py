"""
Exact fractional chromatic number.

Solves max sum(y_v) subject to sum_{v in I} y_v <= 1 for every maximal independent set I,
y >= 0, whose optimum equals the covering LP optimum by duality. The all-slack basis is
feasible, so no phase one is needed. Pivoting is exact over Fraction with Bland's rule.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple
import logging

import networkx as nx

from .graph import Graph, SolverConfig

logger = logging.getLogger(__name__)


@dataclass
class FractionalResult:
    value: Fraction
    independent_sets: List[Tuple[int, ...]]
    weights: List[Fraction]
    pivots: int = 0


class SimplexTableau:
    """Dictionary-form tableau: x_B = b - A x_N, z = z0 + c x_N."""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], objective: List[Fraction]):
        self.m = len(rows)
        self.n = len(objective)
        self.A = [list(r) for r in rows]
        self.b = list(rhs)
        self.c = list(objective)
        self.z = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.z += delta * self.b[i]
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta

        row = self.A[i]
        for col in range(self.n):
            row[col] = 1 / piv if col == j else row[col] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            other = self.A[k]
            for col in range(self.n):
                other[col] = -f / piv if col == j else other[col] - f * row[col]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i)
                          for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def solve(self) -> str:
        while True:
            status = self.bland_step()
            if status != "go_on":
                return status

    def dual_values(self) -> List[Fraction]:
        """Optimal value of each constraint's dual, read from the slack reduced costs."""
        duals = [Fraction(0)] * self.m
        for j, var in enumerate(self.nb_vars):
            if var >= self.n:
                duals[var - self.n] = -self.c[j]
        return duals


def maximal_independent_sets(g: Graph) -> List[Tuple[int, ...]]:
    complement = nx.complement(g.to_networkx())
    return sorted(tuple(sorted(s)) for s in nx.find_cliques(complement))


def solve_fractional(g: Graph, config: Optional[SolverConfig] = None) -> FractionalResult:
    config = config or SolverConfig()
    if g.n > config.fractional_limit:
        raise ValueError(f"Fractional chromatic number is limited to {config.fractional_limit} vertices, '{g.name}' has {g.n}")
    if g.n == 0:
        return FractionalResult(Fraction(0), [], [])

    sets = maximal_independent_sets(g)
    rows = [[Fraction(1 if v in s else 0) for v in range(g.n)] for s in sets]
    tableau = SimplexTableau(rows, [Fraction(1)] * len(sets), [Fraction(1)] * g.n)
    status = tableau.solve()
    if status != "optimal":
        raise RuntimeError(f"Fractional LP for '{g.name}' ended as {status}")

    weights = tableau.dual_values()
    covered = [sum((w for s, w in zip(sets, weights) if v in s), Fraction(0)) for v in range(g.n)]
    if sum(weights) != tableau.z or any(x < 1 for x in covered):
        raise RuntimeError(f"Fractional LP for '{g.name}' produced an inconsistent certificate")
    logger.debug(f"chi_f({g.name}) = {tableau.z} over {len(sets)} independent sets, {tableau.pivots} pivots")
    return FractionalResult(tableau.z, sets, weights, tableau.pivots)


def fractional_chromatic(g: Graph, config: Optional[SolverConfig] = None) -> Fraction:
    return solve_fractional(g, config).value
