"""
Deterministic constructors for the graph families: complete graphs, cycles, Kneser and
Schrijver graphs, universal graphs, generalized Mycielski graphs and sampled Borsuk graphs.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple
import logging
import math
import re

import networkx as nx
import numpy as np

from .graph import Coloring, Graph, check_proper

logger = logging.getLogger(__name__)

_SUBSET_LABEL = re.compile(r"^\{([\d,]*)\}$")
_UNIVERSAL_LABEL = re.compile(r"^\((\d+)\|\{([\d,]*)\}\)$")
_POINT_LABEL = re.compile(r"^\(([^()]*)\)$")


def subset_label(elements: Sequence[int]) -> str:
    return "{" + ",".join(str(e) for e in sorted(elements)) + "}"


def parse_subset_label(label: str) -> FrozenSet[int]:
    match = _SUBSET_LABEL.match(label)
    if not match:
        raise ValueError(f"'{label}' is not a subset label like '{{1,3}}'")
    body = match.group(1)
    return frozenset(int(x) for x in body.split(",")) if body else frozenset()


def universal_label(i: int, a: Sequence[int]) -> str:
    return f"({i}|{subset_label(a)})"


def parse_universal_label(label: str) -> Tuple[int, FrozenSet[int]]:
    match = _UNIVERSAL_LABEL.match(label)
    if not match:
        raise ValueError(f"'{label}' is not a universal-graph label like '(2|{{1,4}})'")
    body = match.group(2)
    return int(match.group(1)), (frozenset(int(x) for x in body.split(",")) if body else frozenset())


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise ValueError(f"complete_graph needs m >= 1, got {m}")
    labels = [str(i) for i in range(1, m + 1)]
    graph = nx.relabel_nodes(nx.complete_graph(m), lambda i: str(i + 1))
    return Graph.from_networkx(graph, labels, name=f"complete({m})", transitive=True)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    labels = [str(i) for i in range(1, n + 1)]
    graph = nx.relabel_nodes(nx.cycle_graph(n), lambda i: str(i + 1))
    return Graph.from_networkx(graph, labels, name=f"cycle({n})", transitive=True)


def edgeless(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"edgeless needs n >= 1, got {n}")
    labels = [str(i) for i in range(1, n + 1)]
    graph = nx.relabel_nodes(nx.empty_graph(n), lambda i: str(i + 1))
    return Graph.from_networkx(graph, labels, name=f"edgeless({n})", transitive=True)


def _is_stable(subset: Sequence[int], n: int) -> bool:
    members = set(subset)
    return all((i % n) + 1 not in members for i in members)


def _kneser_nx(n: int, k: int) -> Tuple[nx.Graph, List[str]]:
    """networkx Kneser graph with nodes relabelled to subset labels over [n]."""
    graph = nx.relabel_nodes(nx.kneser_graph(n, k), lambda t: subset_label(x + 1 for x in t))
    order = [subset_label(c) for c in combinations(range(1, n + 1), k)]
    return graph, order


def kneser(n: int, k: int) -> Graph:
    if k < 1 or n < 2 * k:
        raise ValueError(f"kneser needs k >= 1 and n >= 2k, got n={n}, k={k}")
    graph, order = _kneser_nx(n, k)
    return Graph.from_networkx(graph, order, name=f"kneser({n},{k})", transitive=True)


def schrijver(n: int, k: int) -> Graph:
    """Induced subgraph of kneser(n, k) on the k-sets with no two cyclically adjacent elements."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"schrijver needs k >= 1 and n >= 2k, got n={n}, k={k}")
    graph, _ = _kneser_nx(n, k)
    stable = [subset_label(c) for c in combinations(range(1, n + 1), k) if _is_stable(c, n)]
    return Graph.from_networkx(graph.subgraph(stable), stable, name=f"schrijver({n},{k})")


def universal(m: int, r: int) -> Graph:
    """Vertices (i, A) with |A| = r-1 and i not in A; (i,A) ~ (j,B) iff i in B and j in A."""
    if not 1 <= r <= m:
        raise ValueError(f"universal needs 1 <= r <= m, got m={m}, r={r}")
    vertices = [(i, frozenset(a)) for i in range(1, m + 1)
                for a in combinations([x for x in range(1, m + 1) if x != i], r - 1)]
    position = {v: idx for idx, v in enumerate(vertices)}
    edges = []
    for idx, (i, a) in enumerate(vertices):
        for j in a:
            if j < i:
                continue
            for b in combinations([x for x in range(1, m + 1) if x != j], r - 1):
                b = frozenset(b)
                if i in b:
                    edges.append((idx, position[(j, b)]))
    labels = [universal_label(i, sorted(a)) for i, a in vertices]
    return Graph.from_edges(labels, edges, name=f"universal({m},{r})", transitive=True)


def natural_coloring(u: Graph) -> Coloring:
    """Color (i, A) by i."""
    try:
        firsts = [parse_universal_label(label)[0] for label in u.labels]
    except ValueError as e:
        raise ValueError(f"natural_coloring needs a graph built by universal(m, r): {e}")
    return Coloring.of(i - 1 for i in firsts)


def generalized_mycielski(g: Graph, levels: int) -> Graph:
    """Levels 0..levels-1 of V(g) plus an apex z.

    Level 0 keeps E(g); (u,i) ~ (v,i+1) for every edge uv; z is joined to the top level.
    levels = 2 is the classical Mycielskian.
    """
    if levels < 2:
        raise ValueError(f"generalized_mycielski needs levels >= 2, got {levels}")
    n = g.n
    labels = [f"({g.labels[v]},{i})" for i in range(levels) for v in range(n)] + ["z"]
    edges = list(g.edges())
    for i in range(levels - 1):
        for u, v in g.edges():
            edges.append((i * n + u, (i + 1) * n + v))
            edges.append((i * n + v, (i + 1) * n + u))
    apex = levels * n
    edges.extend((apex, (levels - 1) * n + v) for v in range(n))
    return Graph.from_edges(labels, edges, name=f"mycielski({g.name},{levels})")


def mycielski_extension_coloring(g: Graph, c: Coloring, levels: int = 2) -> Coloring:
    """Extend a proper coloring of g to generalized_mycielski(g, levels) with one new color.

    Even levels copy c, odd levels take the new color. The apex takes the new color when
    the top level is even and color 0 otherwise.
    """
    check_proper(g, c)
    if levels < 2:
        raise ValueError(f"mycielski_extension_coloring needs levels >= 2, got {levels}")
    fresh = c.palette_size
    colors: List[int] = []
    for i in range(levels):
        colors.extend(c.colors if i % 2 == 0 else [fresh] * g.n)
    colors.append(0 if (levels - 1) % 2 else fresh)
    return Coloring.of(colors)


@dataclass(frozen=True)
class PointSource:
    """Either `circle_uniform` (evenly spaced on the unit circle) or `sphere_seeded`."""
    kind: str
    count: int
    seed: int = 0

    @classmethod
    def circle_uniform(cls, count: int) -> 'PointSource':
        return cls("circle_uniform", count)

    @classmethod
    def sphere_seeded(cls, count: int, seed: int = 0) -> 'PointSource':
        return cls("sphere_seeded", count, seed)

    def describe(self) -> str:
        if self.kind == "circle_uniform":
            return f"circle_uniform({self.count})"
        return f"sphere_seeded({self.count},seed={self.seed})"


def sample_points(dim: int, source: PointSource) -> np.ndarray:
    if source.count < 1:
        raise ValueError(f"Point count must be >= 1, got {source.count}")
    if source.kind == "circle_uniform":
        if dim != 2:
            raise ValueError(f"circle_uniform points live in dimension 2, got {dim}")
        angles = 2 * np.pi * np.arange(source.count) / source.count
        return np.column_stack([np.cos(angles), np.sin(angles)])
    if source.kind == "sphere_seeded":
        rng = np.random.default_rng(source.seed)
        points = rng.standard_normal((source.count, dim))
        return points / np.linalg.norm(points, axis=1, keepdims=True)
    raise ValueError(f"Unknown point source '{source.kind}'")


def point_label(point: Sequence[float]) -> str:
    return "(" + ",".join(repr(float(x)) for x in point) + ")"


def parse_point_label(label: str) -> np.ndarray:
    match = _POINT_LABEL.match(label)
    if not match:
        raise ValueError(f"'{label}' is not a coordinate label")
    return np.array([float(x) for x in match.group(1).split(",")])


def borsuk_sample(dim: int, alpha: float, source: PointSource) -> Graph:
    """Finite Borsuk graph: unit vectors joined when at Euclidean distance >= alpha."""
    if not 0 < alpha < 2:
        raise ValueError(f"alpha must lie in (0, 2), got {alpha}")
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    points = sample_points(dim, source)
    threshold = 1 - alpha * alpha / 2
    gram = points @ points.T
    n = len(points)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if gram[u, v] <= threshold]
    labels = [point_label(p) for p in points]
    logger.debug(f"Borsuk sample dim={dim} alpha={alpha} {source.describe()}: {len(edges)} edges")
    return Graph.from_edges(labels, edges, name=f"borsuk({dim},{alpha},{source.describe()})")


def regular_simplex(dim: int) -> np.ndarray:
    """Rows are the dim+1 unit vertices of a regular simplex inscribed in S^{dim-1}.

    Row j is sqrt((dim+1)/dim) * (H[0, j], ..., H[dim-1, j]) where H is the Helmert
    basis: H[k, j] = 1/sqrt((k+1)(k+2)) for j <= k, -(k+1)/sqrt((k+1)(k+2)) for j = k+1,
    and 0 for j > k+1.
    """
    helmert = np.zeros((dim, dim + 1))
    for k in range(dim):
        norm = math.sqrt((k + 1) * (k + 2))
        helmert[k, :k + 1] = 1 / norm
        helmert[k, k + 1] = -(k + 1) / norm
    return math.sqrt((dim + 1) / dim) * helmert.T


@dataclass
class FacetColoringResult:
    coloring: Coloring
    proper: bool
    violating_edge: Optional[Tuple[int, int]] = None


def simplex_facet_coloring(b: Graph, dim: int) -> FacetColoringResult:
    """Color each sampled point by the nearest vertex of the fixed regular simplex."""
    points = np.array([parse_point_label(label) for label in b.labels])
    if points.ndim != 2 or points.shape[1] != dim:
        raise ValueError(f"Graph '{b.name}' has points of dimension {points.shape[-1]}, expected {dim}")
    scores = points @ regular_simplex(dim).T
    colors = [int(c) for c in np.argmax(scores, axis=1)]
    bad = b.violating_edge(colors)
    return FacetColoringResult(Coloring.of(colors), bad is None, bad)
