"""
Exact search: homomorphisms, chromatic and local chromatic numbers, proper partitions
and multicolored bicliques.

All searches count nodes against a deterministic budget and report "budget" instead of
guessing when it runs out.
"""

from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from .families import complete_graph, parse_universal_label, universal
from .graph import (
    BUDGET, INFEASIBLE, SOLVED,
    ChromaticResult, Coloring, Graph, HomomorphismMap, HomomorphismResult,
    LocalChromaticResult, SolverConfig, check_proper, local_colorfulness,
)

logger = logging.getLogger(__name__)

METHODS = ("direct", "partitions", "hom_universal")


class BudgetExceeded(RuntimeError):
    pass


class NodeCounter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"node budget of {self.budget} exceeded")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class HomomorphismSolver:
    """Backtracking CSP for edge-preserving maps g -> h.

    Domains are bitmasks over V(h). Variables are picked by minimum remaining values
    (ties by smallest index) and every assignment is followed by arc consistency.
    With `interchangeable`, the target is complete and only the smallest unused value
    is tried as a fresh color. With `first_values`, the first branching vertex only
    tries those representatives of the target's vertex orbits.
    """

    def __init__(self, g: Graph, h: Graph, counter: NodeCounter,
                 interchangeable: bool = False, first_values: Optional[Sequence[int]] = None):
        self.g = g
        self.h = h
        self.counter = counter
        self.interchangeable = interchangeable
        self.first_values = None
        if first_values is not None:
            self.first_values = 0
            for a in first_values:
                self.first_values |= 1 << a
        self.target_masks = h.neighbor_masks()
        self._branched = False

    def _support(self, domain: int) -> int:
        support = 0
        for b in _bits(domain):
            support |= self.target_masks[b]
        return support

    def _propagate(self, domains: List[int], changed: List[int]) -> bool:
        queue = list(changed)
        queued = set(queue)
        while queue:
            v = queue.pop()
            queued.discard(v)
            support = self._support(domains[v])
            for u in self.g.adjacency[v]:
                narrowed = domains[u] & support
                if narrowed != domains[u]:
                    if not narrowed:
                        return False
                    domains[u] = narrowed
                    if u not in queued:
                        queue.append(u)
                        queued.add(u)
        return True

    def _initial_domains(self) -> Optional[List[int]]:
        everything = (1 << self.h.n) - 1
        with_neighbors = 0
        for a, mask in enumerate(self.target_masks):
            if mask:
                with_neighbors |= 1 << a
        domains = [with_neighbors if self.g.adjacency[v] else everything for v in range(self.g.n)]
        if any(d == 0 for d in domains):
            return None
        if not self._propagate(domains, list(range(self.g.n))):
            return None
        return domains

    def solve(self) -> Optional[List[int]]:
        if self.g.n == 0:
            return []
        if self.h.n == 0:
            return None
        domains = self._initial_domains()
        if domains is None:
            return None
        assigned = [False] * self.g.n
        return self._search(domains, assigned, 0)

    def _search(self, domains: List[int], assigned: List[bool], used_mask: int) -> Optional[List[int]]:
        self.counter.tick()
        best, best_size = -1, None
        for v in range(self.g.n):
            if assigned[v]:
                continue
            size = bin(domains[v]).count("1")
            if best_size is None or size < best_size:
                best, best_size = v, size
        if best < 0:
            return [d.bit_length() - 1 for d in domains]

        values = domains[best]
        if self.interchangeable:
            fresh = values & ~used_mask
            if fresh:
                values = (values & used_mask) | (fresh & -fresh)
        if not self._branched:
            self._branched = True
            if self.first_values is not None and values & self.first_values:
                values &= self.first_values

        assigned[best] = True
        for a in _bits(values):
            trial = list(domains)
            trial[best] = 1 << a
            if self._propagate(trial, [best]):
                found = self._search(trial, assigned, used_mask | (1 << a))
                if found is not None:
                    return found
        assigned[best] = False
        return None


def _first_values(h: Graph, config: SolverConfig) -> Optional[List[int]]:
    if config.symmetry_breaking and h.transitive and h.n:
        return [0]
    return None


def find_homomorphism(g: Graph, h: Graph, config: Optional[SolverConfig] = None,
                      counter: Optional[NodeCounter] = None) -> HomomorphismResult:
    """Edge-preserving map g -> h, a definite "none", or a budget outcome."""
    config = config or SolverConfig()
    counter = counter or NodeCounter(config.node_budget)
    solver = HomomorphismSolver(g, h, counter, first_values=_first_values(h, config))
    try:
        image = solver.solve()
    except BudgetExceeded as e:
        logger.warning(f"Homomorphism search {g.name} -> {h.name} stopped: {e}")
        return HomomorphismResult(None, BUDGET, counter.nodes, str(e))
    if image is None:
        logger.debug(f"No homomorphism {g.name} -> {h.name} ({counter.nodes} nodes)")
        return HomomorphismResult(None, INFEASIBLE, counter.nodes)
    mapping = HomomorphismMap(tuple(image))
    if not mapping.verify(g, h):
        raise RuntimeError(f"Homomorphism search {g.name} -> {h.name} produced a map that is not edge-preserving")
    return HomomorphismResult(mapping, SOLVED, counter.nodes)


def _k_coloring(g: Graph, k: int, config: SolverConfig, counter: NodeCounter) -> Optional[Coloring]:
    solver = HomomorphismSolver(g, complete_graph(k), counter, interchangeable=config.symmetry_breaking)
    image = solver.solve()
    return Coloring.of(image) if image is not None else None


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def greedy_coloring(g: Graph) -> Coloring:
    colors = nx.coloring.greedy_color(g.to_networkx(), strategy="DSATUR")
    return Coloring.of(colors[v] for v in range(g.n))


def chromatic_number(g: Graph, config: Optional[SolverConfig] = None) -> ChromaticResult:
    """Exact chromatic number, bracketed by the clique number and a DSATUR coloring."""
    config = config or SolverConfig()
    counter = NodeCounter(config.node_budget)
    lower = clique_number(g)
    witness = greedy_coloring(g)
    upper = witness.palette_size
    logger.debug(f"chi({g.name}) bracket [{lower}, {upper}]")
    try:
        for k in range(lower, upper):
            found = _k_coloring(g, k, config, counter)
            if found is not None:
                return ChromaticResult(k, found, SOLVED, counter.nodes, lower, upper)
    except BudgetExceeded as e:
        logger.warning(f"chi({g.name}) stopped: {e}")
        return ChromaticResult(None, None, BUDGET, counter.nodes, lower, upper, str(e))
    return ChromaticResult(upper, witness, SOLVED, counter.nodes, lower, upper)


def local_lower_bound(g: Graph) -> int:
    if g.is_edgeless():
        return 1
    if g.is_bipartite():
        return 2
    return max(3, clique_number(g))


class LocalColoringSearch:
    """Branch and bound over canonical colorings with every open neighborhood seeing
    at most `limit` distinct colors."""

    def __init__(self, g: Graph, limit: int, counter: NodeCounter):
        self.g = g
        self.limit = limit
        self.counter = counter
        self.colors = [-1] * g.n
        self.seen: List[Dict[int, int]] = [dict() for _ in range(g.n)]
        self.used = 0

    def _allowed(self, v: int, c: int) -> bool:
        for w in self.g.adjacency[v]:
            if self.colors[w] == c:
                return False
            if c not in self.seen[w] and len(self.seen[w]) >= self.limit:
                return False
        return True

    def _options(self, v: int) -> List[int]:
        options = [c for c in range(self.used) if self._allowed(v, c)]
        if self.used < self.g.n and self._allowed(v, self.used):
            options.append(self.used)
        return options

    def _assign(self, v: int, c: int):
        self.colors[v] = c
        for w in self.g.adjacency[v]:
            self.seen[w][c] = self.seen[w].get(c, 0) + 1

    def _unassign(self, v: int):
        c = self.colors[v]
        for w in self.g.adjacency[v]:
            count = self.seen[w][c] - 1
            if count:
                self.seen[w][c] = count
            else:
                del self.seen[w][c]
        self.colors[v] = -1

    def solve(self) -> Optional[Coloring]:
        if self.limit < 0 or (self.limit == 0 and not self.g.is_edgeless()):
            return None
        if self._search():
            return Coloring.of(self.colors)
        return None

    def _search(self) -> bool:
        self.counter.tick()
        best, best_options = -1, None
        for v in range(self.g.n):
            if self.colors[v] >= 0:
                continue
            options = self._options(v)
            if not options:
                return False
            if best_options is None or len(options) < len(best_options):
                best, best_options = v, options
        if best < 0:
            return True
        for c in best_options:
            fresh = c == self.used
            self._assign(best, c)
            if fresh:
                self.used += 1
            if self._search():
                return True
            if fresh:
                self.used -= 1
            self._unassign(best)
        return False


def enumerate_proper_partitions(g: Graph, limit: int = 12) -> Iterator[Coloring]:
    """Every partition of V(g) into nonempty independent sets, once each, as canonical colorings."""
    if g.n > limit:
        raise ValueError(f"Partition enumeration is limited to {limit} vertices, '{g.name}' has {g.n}")
    masks = g.neighbor_masks()
    colors = [0] * g.n
    blocks: List[int] = []

    def extend(v: int) -> Iterator[Coloring]:
        if v == g.n:
            yield Coloring.of(colors)
            return
        for b, members in enumerate(blocks):
            if not members & masks[v]:
                colors[v] = b
                blocks[b] = members | (1 << v)
                yield from extend(v + 1)
                blocks[b] = members
        colors[v] = len(blocks)
        blocks.append(1 << v)
        yield from extend(v + 1)
        blocks.pop()

    yield from extend(0)


def _local_direct(g: Graph, config: SolverConfig, counter: NodeCounter) -> Tuple[int, Coloring]:
    witness = greedy_coloring(g)
    upper = local_colorfulness(g, witness)
    for r in range(local_lower_bound(g), upper):
        found = LocalColoringSearch(g, r - 1, counter).solve()
        if found is not None:
            return r, found
    return upper, witness


def _local_partitions(g: Graph, config: SolverConfig, counter: NodeCounter) -> Tuple[int, Coloring]:
    best: Optional[Tuple[int, Coloring]] = None
    for coloring in enumerate_proper_partitions(g, config.partition_limit):
        counter.tick()
        value = local_colorfulness(g, coloring)
        if best is None or value < best[0]:
            best = (value, coloring)
    return best


def _local_hom_universal(g: Graph, config: SolverConfig, counter: NodeCounter) -> Tuple[int, Coloring]:
    # U(m,r) is an induced subgraph of U(m+1,r) and no coloring needs more than n colors
    m = max(g.n, 1)
    for r in range(1, m + 1):
        target = universal(m, r)
        image = HomomorphismSolver(g, target, counter, first_values=_first_values(target, config)).solve()
        if image is not None:
            firsts = [parse_universal_label(target.labels[a])[0] for a in image]
            return r, Coloring.of(i - 1 for i in firsts)
    raise RuntimeError(f"No homomorphism from '{g.name}' into universal({m},{m})")


def local_chromatic_number(g: Graph, method: str = "direct",
                           config: Optional[SolverConfig] = None) -> LocalChromaticResult:
    """Minimum over proper colorings of the largest number of colors in a closed neighborhood."""
    config = config or SolverConfig()
    if method not in METHODS:
        raise ValueError(f"Unknown method '{method}', expected one of {METHODS}")
    if method == "partitions" and g.n > config.partition_limit:
        raise ValueError(f"The partitions method is limited to {config.partition_limit} vertices, '{g.name}' has {g.n}")
    counter = NodeCounter(config.node_budget)
    solve = {"direct": _local_direct, "partitions": _local_partitions, "hom_universal": _local_hom_universal}[method]
    try:
        value, coloring = solve(g, config, counter)
    except BudgetExceeded as e:
        logger.warning(f"psi({g.name}) via {method} stopped: {e}")
        return LocalChromaticResult(None, None, BUDGET, method, counter.nodes, str(e))
    if local_colorfulness(g, coloring) != value:
        raise RuntimeError(f"psi({g.name}) via {method}: witness does not attain {value}")
    logger.debug(f"psi({g.name}) = {value} via {method} ({counter.nodes} nodes)")
    return LocalChromaticResult(value, coloring, SOLVED, method, counter.nodes)


def find_multicolored_biclique(g: Graph, c: Coloring, a: int, b: int
                               ) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Disjoint A, B with |A| = a, |B| = b, all cross pairs adjacent and all a+b colors distinct."""
    if a < 1 or b < 1:
        raise ValueError(f"Biclique sides must be >= 1, got a={a}, b={b}")
    check_proper(g, c)
    for side in combinations(range(g.n), a):
        side_colors = {c.colors[v] for v in side}
        if len(side_colors) < a:
            continue
        common = set(g.adjacency[side[0]])
        for v in side[1:]:
            common &= g.adjacency[v]
        picked: Dict[int, int] = {}
        for v in sorted(common):
            color = c.colors[v]
            if color not in side_colors and color not in picked:
                picked[color] = v
        if len(picked) >= b:
            other = sorted(picked.values())[:b]
            return frozenset(side), frozenset(other)
    return None
