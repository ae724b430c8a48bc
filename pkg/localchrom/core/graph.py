"""
Graph, coloring and homomorphism types shared by every solver.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

logger = logging.getLogger(__name__)

Rational = Fraction

SOLVED = "solved"
INFEASIBLE = "infeasible"
BUDGET = "budget"


@dataclass
class SolverConfig:
    node_budget: int = 20_000_000
    partition_limit: int = 12
    fractional_limit: int = 16
    symmetry_breaking: bool = True


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1 with unique display labels.

    `transitive` is set by constructors of vertex-transitive families and checked on JSON
    input; solvers use it to fix the image of the first branching vertex.
    """
    labels: Tuple[str, ...]
    adjacency: Tuple[FrozenSet[int], ...]
    name: str = "graph"
    transitive: bool = False

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise ValueError(f"Graph '{self.name}': {len(self.labels)} labels for {len(self.adjacency)} vertices")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"Graph '{self.name}': vertex labels must be unique")
        n = len(self.labels)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"Graph '{self.name}': neighbor index {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"Graph '{self.name}': self-loop at vertex {self.labels[v]}")
                if v not in self.adjacency[u]:
                    raise ValueError(f"Graph '{self.name}': edge {self.labels[v]}-{self.labels[u]} is not symmetric")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Tuple[int, int]],
                   name: str = "graph", transitive: bool = False) -> 'Graph':
        adjacency: List[set] = [set() for _ in labels]
        for u, v in edges:
            if u == v:
                raise ValueError(f"Graph '{name}': self-loop at vertex {u}")
            if not (0 <= u < len(labels) and 0 <= v < len(labels)):
                raise ValueError(f"Graph '{name}': edge ({u},{v}) out of range")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(tuple(str(label) for label in labels), tuple(frozenset(a) for a in adjacency), name, transitive)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, order: Optional[Sequence] = None,
                      name: str = "graph", transitive: bool = False) -> 'Graph':
        """Vertices follow `order` (default: the node order of `graph`); node ids become labels."""
        nodes = list(graph.nodes) if order is None else list(order)
        position = {node: i for i, node in enumerate(nodes)}
        if len(position) != graph.number_of_nodes() or any(node not in graph for node in nodes):
            raise ValueError(f"Graph '{name}': vertex order does not match the networkx nodes")
        return cls.from_edges([str(node) for node in nodes],
                              ((position[u], position[v]) for u, v in graph.edges()), name, transitive)

    @property
    def n(self) -> int:
        return len(self.labels)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return sorted((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Graph '{self.name}' has no vertex labelled '{label}'")

    def neighbor_masks(self) -> List[int]:
        """Neighborhoods as integer bitmasks."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return masks

    def induced_subgraph(self, vertices: Iterable[int], name: Optional[str] = None) -> 'Graph':
        keep = sorted(set(vertices))
        position = {v: i for i, v in enumerate(keep)}
        edges = [(position[u], position[v]) for u, v in self.edges() if u in position and v in position]
        return Graph.from_edges([self.labels[v] for v in keep], edges, name or f"{self.name}[sub]")

    def is_edgeless(self) -> bool:
        return all(not a for a in self.adjacency)

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def is_vertex_transitive(self) -> bool:
        """Every vertex is the image of vertex 0 under some automorphism."""
        if self.n <= 1:
            return True
        base = self.to_networkx()
        for w in range(1, self.n):
            if self.degree(w) != self.degree(0):
                return False
            source, target = base.copy(), base.copy()
            source.nodes[0]["pinned"] = True
            target.nodes[w]["pinned"] = True
            matcher = GraphMatcher(source, target,
                                   node_match=lambda a, b: a.get("pinned", False) == b.get("pinned", False))
            if not matcher.is_isomorphic():
                return False
        return True

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def violating_edge(self, colors: Sequence[int]) -> Optional[Tuple[int, int]]:
        for u, v in self.edges():
            if colors[u] == colors[v]:
                return u, v
        return None


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring, always kept in canonical form (colors first appear as 0, 1, 2, ...)."""
    colors: Tuple[int, ...]

    def __post_init__(self):
        relabel: Dict[int, int] = {}
        canonical = []
        for c in self.colors:
            if c < 0:
                raise ValueError(f"Color ids must be nonnegative, got {c}")
            if c not in relabel:
                relabel[c] = len(relabel)
            canonical.append(relabel[c])
        object.__setattr__(self, "colors", tuple(canonical))

    @classmethod
    def of(cls, colors: Iterable[int]) -> 'Coloring':
        return cls(tuple(colors))

    @property
    def palette_size(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class HomomorphismMap:
    image: Tuple[int, ...]

    def verify(self, g: Graph, h: Graph) -> bool:
        """Independent edge-preservation check."""
        if len(self.image) != g.n or any(not 0 <= a < h.n for a in self.image):
            return False
        return all(h.has_edge(self.image[u], self.image[v]) for u, v in g.edges())


@dataclass
class ChromaticResult:
    value: Optional[int]
    coloring: Optional[Coloring]
    status: str
    nodes: int = 0
    lower_bound: Optional[int] = None
    upper_bound: Optional[int] = None
    error: Optional[str] = None


@dataclass
class LocalChromaticResult:
    value: Optional[int]
    coloring: Optional[Coloring]
    status: str
    method: str
    nodes: int = 0
    error: Optional[str] = None


@dataclass
class HomomorphismResult:
    mapping: Optional[HomomorphismMap]
    status: str
    nodes: int = 0
    error: Optional[str] = None

    @property
    def exists(self) -> Optional[bool]:
        if self.status == BUDGET:
            return None
        return self.mapping is not None


def check_proper(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ValueError(f"Coloring has {len(c)} entries but graph '{g.name}' has {g.n} vertices")
    bad = g.violating_edge(c.colors)
    if bad is not None:
        u, v = bad
        raise ValueError(f"Improper coloring of '{g.name}': edge {g.labels[u]}-{g.labels[v]} has both ends colored {c.colors[u]}")


def neighborhood_color_counts(g: Graph, c: Coloring) -> List[int]:
    return [len({c.colors[u] for u in g.adjacency[v]}) for v in range(g.n)]


def local_colorfulness(g: Graph, c: Coloring) -> int:
    """Largest number of colors in a closed neighborhood under the proper coloring c."""
    check_proper(g, c)
    return max(neighborhood_color_counts(g, c), default=0) + 1
