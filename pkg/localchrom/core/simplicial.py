"""
Finite abstract simplicial complexes stored by facets, with optional Z2 involutions.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging
import threading

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


@dataclass(frozen=True)
class FVector:
    counts: Tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        return self.counts[d]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def euler(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.counts))


@dataclass(frozen=True)
class Z2Structure:
    """Both flags are recomputed from the complex, never taken from input."""
    involution: Tuple[int, ...]
    is_valid: bool
    is_free: bool


def simplex_label(labels: Sequence[str], simplex: Iterable[int]) -> str:
    return "{" + ",".join(labels[v] for v in sorted(simplex)) + "}"


def _reduce_to_maximal(facets: Iterable[FrozenSet[int]]) -> List[FrozenSet[int]]:
    by_size = sorted(set(facets), key=lambda f: (-len(f), sorted(f)))
    kept: List[FrozenSet[int]] = []
    containing: Dict[int, List[FrozenSet[int]]] = {}
    for f in by_size:
        pivot = min(f)
        if any(f <= big for big in containing.get(pivot, ())):
            continue
        kept.append(f)
        for v in f:
            containing.setdefault(v, []).append(f)
    return kept


class SimplicialComplex:
    """Vertex-labelled complex given by its inclusion-maximal facets.

    Faces are enumerated on demand and memoized per dimension. Instances are treated as
    immutable; the memo is guarded by a lock so concurrent readers see one consistent cache.
    """

    def __init__(self, labels: Sequence[str], facets: Iterable[Iterable[int]],
                 name: str = "complex", involution: Optional[Sequence[int]] = None):
        self.labels: Tuple[str, ...] = tuple(labels)
        self.facets: Tuple[Simplex, ...] = tuple(sorted(tuple(sorted(f)) for f in facets))
        self.name = name
        self.involution: Optional[Tuple[int, ...]] = tuple(involution) if involution is not None else None
        self._faces: Optional[List[List[Simplex]]] = None
        self._lock = threading.Lock()

    @classmethod
    def from_facets(cls, labels: Sequence[str], facets: Iterable[Iterable[int]],
                    name: str = "complex", involution: Optional[Sequence[int]] = None) -> 'SimplicialComplex':
        labels = [str(label) for label in labels]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Complex '{name}': vertex labels must be unique")
        sets = []
        for facet in facets:
            facet = frozenset(facet)
            if not facet:
                raise ValueError(f"Complex '{name}': empty facet")
            for v in facet:
                if not 0 <= v < len(labels):
                    raise ValueError(f"Complex '{name}': vertex index {v} out of range 0..{len(labels) - 1}")
            sets.append(facet)
        if not sets:
            raise ValueError(f"Complex '{name}' has no facets; empty complexes are refused")
        covered = set().union(*sets)
        if len(covered) != len(labels):
            missing = sorted(set(range(len(labels))) - covered)
            raise ValueError(f"Complex '{name}': vertices {[labels[v] for v in missing]} lie in no facet")
        if involution is not None and len(involution) != len(labels):
            raise ValueError(f"Complex '{name}': involution has {len(involution)} entries for {len(labels)} vertices")
        return cls(labels, _reduce_to_maximal(sets), name, involution)

    @classmethod
    def empty(cls, name: str = "empty") -> 'SimplicialComplex':
        """The void complex; only produced as the link of an isolated vertex."""
        return cls((), (), name)

    @property
    def n(self) -> int:
        return len(self.labels)

    def is_empty(self) -> bool:
        return not self.facets

    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Complex '{self.name}' has no vertex labelled '{label}'")

    def simplices_by_dim(self) -> List[List[Simplex]]:
        """Every face of every facet, deduplicated; entry d lists the d-simplices sorted."""
        with self._lock:
            if self._faces is None:
                buckets: List[set] = [set() for _ in range(self.dim() + 1)]
                for facet in self.facets:
                    for k in range(1, len(facet) + 1):
                        buckets[k - 1].update(combinations(facet, k))
                self._faces = [sorted(b) for b in buckets]
                logger.debug(f"Enumerated {sum(len(b) for b in self._faces)} simplices of {self.name}")
            return self._faces

    def contains(self, simplex: Iterable[int]) -> bool:
        simplex = set(simplex)
        if not simplex:
            return True
        return any(simplex.issubset(f) for f in self.facets)

    def f_vector(self) -> FVector:
        return FVector(tuple(len(b) for b in self.simplices_by_dim()))

    def euler(self) -> int:
        return self.f_vector().euler

    def z2(self) -> Optional[Z2Structure]:
        if self.involution is None:
            return None
        nu = self.involution
        valid = (all(0 <= nu[v] < self.n for v in range(self.n))
                 and all(nu[nu[v]] == v for v in range(self.n))
                 and all(self.contains(nu[v] for v in f) for f in self.facets))
        # a setwise-fixed simplex exists iff some {v, nu(v)} is a simplex
        free = valid and not any(self.contains((v, nu[v])) for v in range(self.n))
        return Z2Structure(nu, valid, free)

    def one_skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for f in self.facets:
            graph.add_edges_from(combinations(f, 2))
        return graph

    def incidence_graph(self) -> nx.Graph:
        """Bipartite vertex-facet incidence graph; isomorphisms of these are complex isomorphisms."""
        graph = nx.Graph()
        graph.add_nodes_from((("v", v) for v in range(self.n)), kind="vertex")
        for i, f in enumerate(self.facets):
            graph.add_node(("f", i), kind="facet")
            graph.add_edges_from((("v", v), ("f", i)) for v in f)
        return graph

    def labelled_facets(self) -> FrozenSet[FrozenSet[str]]:
        """Facets by vertex label, for comparing complexes built on different index orders."""
        return frozenset(frozenset(self.labels[v] for v in f) for f in self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(name={self.name!r}, n={self.n}, facets={len(self.facets)})"


def barycentric_subdivision(k: SimplicialComplex, budget: int = 2_000_000) -> SimplicialComplex:
    """Vertices are the simplices of k, facets its maximal chains; the involution is transported."""
    chains = sum(factorial(len(f)) for f in k.facets)
    if chains > budget:
        raise ValueError(f"Subdivision of '{k.name}' has {chains} maximal chains, over the budget of {budget}")
    simplices = [s for layer in k.simplices_by_dim() for s in layer]
    position = {s: i for i, s in enumerate(simplices)}
    facets = set()
    for facet in k.facets:
        for order in permutations(facet):
            facets.add(frozenset(position[tuple(sorted(order[:i]))] for i in range(1, len(order) + 1)))
    involution = None
    if k.involution is not None:
        nu = k.involution
        involution = [position[tuple(sorted(nu[v] for v in s))] for s in simplices]
    labels = [simplex_label(k.labels, s) for s in simplices]
    return SimplicialComplex(labels, facets, f"sd({k.name})", involution)


def link(k: SimplicialComplex, v: int) -> SimplicialComplex:
    """{s - {v} : v in s, s != {v}}, on the vertices that occur in it."""
    if not 0 <= v < k.n:
        raise ValueError(f"Complex '{k.name}' has no vertex {v}")
    pieces = [set(f) - {v} for f in k.facets if v in f]
    pieces = [p for p in pieces if p]
    name = f"lk({k.name},{k.labels[v]})"
    if not pieces:
        return SimplicialComplex.empty(name)
    keep = sorted(set().union(*pieces))
    position = {u: i for i, u in enumerate(keep)}
    return SimplicialComplex.from_facets([k.labels[u] for u in keep],
                                         [[position[u] for u in p] for p in pieces], name)


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    """Two apexes a+ and a-; the involution swaps them and keeps the base involution."""
    top, bottom = k.n, k.n + 1
    if k.is_empty():
        facets = [[top], [bottom]]
    else:
        facets = [list(f) + [apex] for f in k.facets for apex in (top, bottom)]
    involution = None
    if k.involution is not None:
        involution = list(k.involution) + [bottom, top]
    return SimplicialComplex.from_facets(list(k.labels) + ["a+", "a-"], facets, f"susp({k.name})", involution)


def is_isomorphic(k1: SimplicialComplex, k2: SimplicialComplex, limit: int = 40) -> Optional[Dict[int, int]]:
    """A vertex bijection k1 -> k2 carrying facets onto facets, or None."""
    for k in (k1, k2):
        if k.n > limit:
            raise ValueError(f"Isomorphism test is limited to {limit} vertices, '{k.name}' has {k.n}")
    if k1.n != k2.n or len(k1.facets) != len(k2.facets):
        return None
    if sorted(len(f) for f in k1.facets) != sorted(len(f) for f in k2.facets):
        return None
    matcher = GraphMatcher(k1.incidence_graph(), k2.incidence_graph(),
                           node_match=lambda a, b: a["kind"] == b["kind"])
    for mapping in matcher.isomorphisms_iter():
        return {v: w for (kind, v), (_, w) in mapping.items() if kind == "v"}
    return None


def connected_components(k: SimplicialComplex) -> List[List[int]]:
    return sorted(sorted(c) for c in nx.connected_components(k.one_skeleton()))


def is_cycle(k: SimplicialComplex) -> bool:
    """Connected, one-dimensional, every vertex in exactly two edges."""
    if k.is_empty() or k.n < 3 or any(len(f) != 2 for f in k.facets):
        return False
    skeleton = k.one_skeleton()
    return all(d == 2 for _, d in skeleton.degree()) and nx.is_connected(skeleton)


def skeleton_complex(m: int, size: int) -> SimplicialComplex:
    """All nonempty subsets of [m] with at most `size` elements."""
    if m < 1 or not 1 <= size <= m:
        raise ValueError(f"skeleton_complex needs 1 <= size <= m, got m={m}, size={size}")
    return SimplicialComplex.from_facets([str(i) for i in range(1, m + 1)], combinations(range(m), size),
                                         f"skeleton({m},{size})")


@dataclass
class ComplexConfig:
    isomorphism_limit: int = 40
    chain_budget: int = 2_000_000
    workers: int = 4
