"""
DIMACS export of the homomorphism problem g -> h under the direct encoding.
"""

from dataclasses import dataclass, field
from typing import Iterable, List

from .graph import Graph

Clause = List[int]


@dataclass
class CNF:
    num_vars: int
    clauses: List[Clause] = field(default_factory=list)
    comments: List[str] = field(default_factory=list)

    def add_clause(self, clause: Iterable[int]) -> None:
        lits = [int(lit) for lit in clause]
        if any(lit == 0 or abs(lit) > self.num_vars for lit in lits):
            raise ValueError(f"Clause {lits} has a literal outside 1..{self.num_vars}")
        self.clauses.append(lits)

    def to_dimacs(self) -> str:
        lines = [f"c {c}" for c in self.comments]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CNF:
    cnf = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"Bad DIMACS header: '{line}'")
            cnf = CNF(int(parts[2]))
            continue
        if cnf is None:
            raise ValueError("DIMACS clause before the 'p cnf' header")
        lits = [int(x) for x in line.split()]
        if not lits or lits[-1] != 0:
            raise ValueError(f"DIMACS clause not 0-terminated: '{line}'")
        cnf.add_clause(lits[:-1])
    if cnf is None:
        raise ValueError("No 'p cnf' header found")
    return cnf


def hom_variable(v: int, a: int, target_size: int) -> int:
    """x_{v,a} is true iff v maps to a."""
    return v * target_size + a + 1


def hom_cnf(g: Graph, h: Graph) -> CNF:
    """Satisfying assignments are exactly the homomorphisms g -> h."""
    size = h.n
    cnf = CNF(g.n * size, comments=[
        f"homomorphisms {g.name} -> {h.name}",
        f"x(v,a) = v*{size} + a + 1 means vertex v of the source maps to vertex a of the target",
    ])
    for v in range(g.n):
        cnf.add_clause(hom_variable(v, a, size) for a in range(size))
        for a in range(size):
            for b in range(a + 1, size):
                cnf.add_clause([-hom_variable(v, a, size), -hom_variable(v, b, size)])
    non_edges = [(a, b) for a in range(size) for b in range(size) if not h.has_edge(a, b)]
    for u, v in g.edges():
        for a, b in non_edges:
            cnf.add_clause([-hom_variable(u, a, size), -hom_variable(v, b, size)])
    return cnf


def export_hom_cnf(g: Graph, h: Graph) -> str:
    return hom_cnf(g, h).to_dimacs()
