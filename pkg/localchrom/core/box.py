"""
Complexes built from graphs and from the signed ground set [m]: box complexes, hom
complexes as cell posets, neighborhood complexes, bounded cross complexes, Bier spheres
and the bounded hom complexes.

Signed vertices of a ground set of size n are indexed +v -> v and -v -> n + v.
"""

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging
import threading

import networkx as nx

from .graph import Graph
from .simplicial import FVector, SimplicialComplex

logger = logging.getLogger(__name__)

PLUS = "+"
MINUS = "-"


def signed_labels(ground_labels: Sequence[str]) -> List[str]:
    return [f"{PLUS}{x}" for x in ground_labels] + [f"{MINUS}{x}" for x in ground_labels]


def sign_swap(ground_size: int) -> List[int]:
    return [v + ground_size for v in range(ground_size)] + list(range(ground_size))


def signed_facet(plus: Iterable[int], minus: Iterable[int], ground_size: int) -> List[int]:
    return sorted(list(plus) + [ground_size + v for v in minus])


def split_signed(simplex: Iterable[int], ground_size: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Inverse of signed_facet: (S, T) of a signed simplex."""
    simplex = list(simplex)
    return (frozenset(v for v in simplex if v < ground_size),
            frozenset(v - ground_size for v in simplex if v >= ground_size))


@dataclass(frozen=True)
class Cell:
    """The cell S+T: two disjoint vertex sets, plus side first."""
    plus: FrozenSet[int]
    minus: FrozenSet[int]

    @property
    def dim(self) -> int:
        return len(self.plus) + len(self.minus) - 2

    def swapped(self) -> 'Cell':
        return Cell(self.minus, self.plus)

    def __le__(self, other: 'Cell') -> bool:
        return self.plus <= other.plus and self.minus <= other.minus

    def __lt__(self, other: 'Cell') -> bool:
        return self <= other and self != other

    def sort_key(self) -> Tuple:
        return (self.dim, sorted(self.plus), sorted(self.minus))

    def label(self, ground_labels: Sequence[str]) -> str:
        def side(s):
            return "{" + ",".join(ground_labels[v] for v in sorted(s)) + "}"
        return f"{side(self.plus)}|{side(self.minus)}"


class CellPoset:
    """Cells S+T with both sides nonempty, ordered by componentwise inclusion.

    Every face with nonempty sides of a cell is again a cell. Homology of a cell poset is
    the homology of its order complex.
    """

    def __init__(self, ground_labels: Sequence[str], cells: Iterable[Cell], name: str = "cells"):
        self.ground_labels: Tuple[str, ...] = tuple(ground_labels)
        self.cells: Tuple[Cell, ...] = tuple(sorted(set(cells), key=Cell.sort_key))
        self.name = name
        self._members = frozenset(self.cells)
        self._order: Optional[SimplicialComplex] = None
        self._lock = threading.Lock()
        for cell in self.cells:
            if not cell.plus or not cell.minus or cell.plus & cell.minus:
                raise ValueError(f"Poset '{name}': {cell.label(self.ground_labels)} needs disjoint nonempty sides")
            for face in self.boundary_faces(cell):
                if face not in self._members:
                    raise ValueError(f"Poset '{name}' is not closed downward: "
                                     f"{face.label(self.ground_labels)} missing under {cell.label(self.ground_labels)}")

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._members

    def __len__(self) -> int:
        return len(self.cells)

    def cell_dim(self, cell: Cell) -> int:
        return cell.dim

    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    def boundary_faces(self, cell: Cell) -> List[Cell]:
        """Codimension-one faces: drop one element from a side with at least two."""
        faces = []
        if len(cell.plus) > 1:
            faces.extend(Cell(cell.plus - {v}, cell.minus) for v in sorted(cell.plus))
        if len(cell.minus) > 1:
            faces.extend(Cell(cell.plus, cell.minus - {v}) for v in sorted(cell.minus))
        return faces

    def f_vector(self) -> FVector:
        counts = [0] * (self.dim() + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return FVector(tuple(counts))

    def euler(self) -> int:
        return self.f_vector().euler

    def maximal_cells(self) -> List[Cell]:
        covered = {face for c in self.cells for face in self.boundary_faces(c)}
        return [c for c in self.cells if c not in covered]

    def vertices(self) -> List[Cell]:
        return [c for c in self.cells if c.dim == 0]

    def label(self, cell: Cell) -> str:
        return cell.label(self.ground_labels)

    def chain_count(self) -> int:
        return sum(len(c.plus) * len(c.minus) * factorial(c.dim) for c in self.maximal_cells())

    def maximal_chains(self) -> Iterator[Tuple[Cell, ...]]:
        """Each maximal chain starts at a dimension-0 cell and adds one element per step."""
        for top in self.maximal_cells():
            for s0 in sorted(top.plus):
                for t0 in sorted(top.minus):
                    rest = [(PLUS, v) for v in sorted(top.plus - {s0})] + [(MINUS, v) for v in sorted(top.minus - {t0})]
                    for order in permutations(rest):
                        plus, minus = {s0}, {t0}
                        chain = [Cell(frozenset(plus), frozenset(minus))]
                        for sign, v in order:
                            (plus if sign == PLUS else minus).add(v)
                            chain.append(Cell(frozenset(plus), frozenset(minus)))
                        yield tuple(chain)

    def order_complex(self, budget: int = 2_000_000) -> SimplicialComplex:
        """Vertices are cells, facets are maximal chains; the side swap is carried as involution."""
        with self._lock:
            if self._order is not None:
                return self._order
            if not self.cells:
                raise ValueError(f"Poset '{self.name}' has no cells")
            count = self.chain_count()
            if count > budget:
                raise ValueError(f"Order complex of '{self.name}' has {count} maximal chains, over the budget of {budget}")
            position = {c: i for i, c in enumerate(self.cells)}
            facets = [[position[c] for c in chain] for chain in self.maximal_chains()]
            involution = None
            if all(c.swapped() in self._members for c in self.cells):
                involution = [position[c.swapped()] for c in self.cells]
            labels = [self.label(c) for c in self.cells]
            self._order = SimplicialComplex.from_facets(labels, facets, f"order({self.name})", involution)
            logger.debug(f"Order complex of {self.name}: {len(self.cells)} vertices, {len(facets)} facets")
            return self._order

    def link(self, cell: Cell) -> SimplicialComplex:
        """Complex of the signed sets W - V over cells W containing V = cell."""
        if cell not in self._members:
            raise ValueError(f"Poset '{self.name}' has no cell {cell.label(self.ground_labels)}")
        n = len(self.ground_labels)
        pieces = [signed_facet(w.plus - cell.plus, w.minus - cell.minus, n)
                  for w in self.maximal_cells() if cell <= w and w != cell]
        name = f"lk({self.name},{self.label(cell)})"
        if not pieces:
            return SimplicialComplex.empty(name)
        keep = sorted(set().union(*pieces))
        position = {v: i for i, v in enumerate(keep)}
        labels = signed_labels(self.ground_labels)
        return SimplicialComplex.from_facets([labels[v] for v in keep],
                                             [[position[v] for v in p] for p in pieces], name)

    def cover_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.cells)
        graph.add_edges_from((c, face) for c in self.cells for face in self.boundary_faces(c))
        return graph

    def is_connected(self) -> bool:
        return bool(self.cells) and nx.is_connected(self.cover_graph())

    def __repr__(self) -> str:
        return f"CellPoset(name={self.name!r}, cells={len(self.cells)})"


def maximal_bicliques(g: Graph) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Ordered pairs (S, T), both nonempty, with T = CN(S) and S = CN(T).

    The S sides are exactly the nonempty intersections of neighborhoods, found by closing
    the neighborhood family under intersection.
    """
    neighborhoods = [frozenset(a) for a in g.adjacency]
    closed = set(n for n in neighborhoods if n)
    frontier = list(closed)
    while frontier:
        current = frontier.pop()
        for n in neighborhoods:
            meet = current & n
            if meet and meet not in closed:
                closed.add(meet)
                frontier.append(meet)

    def common(vertices: FrozenSet[int]) -> FrozenSet[int]:
        out = None
        for v in vertices:
            out = neighborhoods[v] if out is None else out & neighborhoods[v]
        return out or frozenset()

    pairs = [(common(s), s) for s in closed]
    pairs = [(s, t) for s, t in pairs if s and t]
    return sorted(pairs, key=lambda p: (sorted(p[0]), sorted(p[1])))


def box_complex(g: Graph) -> SimplicialComplex:
    """B0(g): signed vertices, facets V+0, 0+V and every maximal biclique S+T; involution +v <-> -v."""
    if g.n == 0:
        raise ValueError("Box complex of the empty graph is refused")
    n = g.n
    facets = [list(range(n)), list(range(n, 2 * n))]
    facets.extend(signed_facet(s, t, n) for s, t in maximal_bicliques(g))
    complex_ = SimplicialComplex.from_facets(signed_labels(g.labels), facets, f"box({g.name})", sign_swap(n))
    logger.debug(f"Box complex of {g.name}: {len(complex_.facets)} facets")
    return complex_


def hom_complex(g: Graph) -> CellPoset:
    """Every nonempty sub-pair of every maximal biclique of g."""
    if g.is_edgeless():
        raise ValueError(f"Hom complex of the edgeless graph '{g.name}' is empty")
    cells = set()
    for s, t in maximal_bicliques(g):
        for sub_s in _nonempty_subsets(s):
            for sub_t in _nonempty_subsets(t):
                cells.add(Cell(sub_s, sub_t))
    return CellPoset(g.labels, cells, f"hom({g.name})")


def hom_order_complex(g: Graph, budget: int = 2_000_000) -> SimplicialComplex:
    return hom_complex(g).order_complex(budget)


def neighborhood_complex(g: Graph) -> SimplicialComplex:
    """Facets are the inclusion-maximal neighborhoods; isolated vertices never appear."""
    isolated = [g.labels[v] for v in range(g.n) if not g.adjacency[v]]
    if isolated:
        logger.warning(f"Neighborhood complex of {g.name}: isolated vertices {isolated} are dropped")
    keep = [v for v in range(g.n) if g.adjacency[v]]
    if not keep:
        raise ValueError(f"Neighborhood complex of the edgeless graph '{g.name}' is empty")
    position = {v: i for i, v in enumerate(keep)}
    facets = [[position[u] for u in g.adjacency[v]] for v in keep]
    return SimplicialComplex.from_facets([g.labels[v] for v in keep], facets, f"neighborhood({g.name})")


def _nonempty_subsets(s: FrozenSet[int]) -> Iterator[FrozenSet[int]]:
    items = sorted(s)
    for mask in range(1, 1 << len(items)):
        yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)


def signed_pairs(m: int) -> Iterator[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """All disjoint pairs (S, T) of subsets of {0..m-1}, including (0, 0)."""
    for placement in product((0, 1, 2), repeat=m):
        yield (frozenset(i for i, p in enumerate(placement) if p == 1),
               frozenset(i for i, p in enumerate(placement) if p == 2))


def _ground(m: int) -> List[str]:
    return [str(i) for i in range(1, m + 1)]


def bounded_cross_complex(m: int, r: int, primed: bool = False) -> SimplicialComplex:
    """Signed pairs S+T over [m] with |S| < r and |T| < r; `primed` adds every one-sided simplex.

    r = m + 1 gives the full box complex of the complete graph on [m].
    """
    if m < 1 or not 1 <= r <= m + 1:
        raise ValueError(f"bounded_cross_complex needs m >= 1 and 1 <= r <= m+1, got m={m}, r={r}")
    if r == 1 and not primed:
        raise ValueError("bounded_cross_complex with r = 1 is empty unless primed")
    cap = r - 1
    facets = []
    for s, t in signed_pairs(m):
        full = len(s) + len(t) == m
        if len(s) <= cap and len(t) <= cap and (len(s) == cap or full) and (len(t) == cap or full) and (s or t):
            facets.append(signed_facet(s, t, m))
    if primed:
        facets.extend([list(range(m)), list(range(m, 2 * m))])
    name = f"bounded{'_full' if primed else ''}({m},{r})"
    return SimplicialComplex.from_facets(signed_labels(_ground(m)), facets, name, sign_swap(m))


def bier_sphere(m: int, k: SimplicialComplex) -> SimplicialComplex:
    """{S+T : S in k, [m] - T not in k} over the signed ground set [m].

    k's vertex labels must be elements of [m]. Only signed vertices that occur are kept.
    """
    try:
        ground = {k.labels.index(label): int(label) - 1 for label in k.labels}
    except ValueError:
        raise ValueError(f"Bier input '{k.name}' must be labelled by integers 1..{m}")
    if any(not 0 <= x < m for x in ground.values()):
        raise ValueError(f"Bier input '{k.name}' has labels outside 1..{m}")
    faces = {frozenset(ground[v] for v in f) for layer in k.simplices_by_dim() for f in layer}
    faces.add(frozenset())
    everything = frozenset(range(m))
    if everything in faces:
        raise ValueError(f"Bier input '{k.name}' contains the full set [{m}]")

    facets = []
    for s, t in signed_pairs(m):
        if (s or t) and s in faces and (everything - t) not in faces:
            facets.append(signed_facet(s, t, m))
    if not facets:
        raise ValueError(f"Bier sphere of '{k.name}' over [{m}] is empty")
    used = sorted(set().union(*map(set, facets)))
    position = {v: i for i, v in enumerate(used)}
    labels = signed_labels(_ground(m))
    return SimplicialComplex.from_facets([labels[v] for v in used],
                                         [[position[v] for v in f] for f in facets], f"bier({m},{k.name})")


def truncated_hom_complex(m: int, r: int) -> CellPoset:
    """Cells S+T of Hom(K2, K_m) with both sides of size at most r-1."""
    if not 2 <= r <= m:
        raise ValueError(f"truncated_hom_complex needs 2 <= r <= m, got m={m}, r={r}")
    cells = [Cell(s, t) for s, t in signed_pairs(m) if s and t and len(s) < r and len(t) < r]
    return CellPoset(_ground(m), cells, f"hom_bounded({m},{r})")
