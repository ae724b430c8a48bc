import pytest

from localchrom.core import (
    SolverConfig, ComplexConfig, complete_graph, cycle, edgeless, kneser, generalized_mycielski,
)


def dpll(clauses, assignment=None):
    """Tiny DPLL used to cross-check CNF exports; returns a satisfying set of literals or None."""
    assignment = set(assignment or ())
    clauses = [list(c) for c in clauses]
    while True:
        simplified = []
        for clause in clauses:
            if any(lit in assignment for lit in clause):
                continue
            rest = [lit for lit in clause if -lit not in assignment]
            if not rest:
                return None
            simplified.append(rest)
        clauses = simplified
        units = [c[0] for c in clauses if len(c) == 1]
        if not units:
            break
        assignment.add(units[0])
    if not clauses:
        return assignment
    lit = clauses[0][0]
    for choice in (lit, -lit):
        found = dpll(clauses, assignment | {choice})
        if found is not None:
            return found
    return None


@pytest.fixture
def solver_config():
    return SolverConfig(node_budget=5_000_000)


@pytest.fixture
def complex_config():
    return ComplexConfig(workers=2)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def petersen():
    return kneser(5, 2)


@pytest.fixture
def groetzsch():
    return generalized_mycielski(cycle(5), 2)


@pytest.fixture
def three_points():
    return edgeless(3)
