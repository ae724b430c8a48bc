"""
Equivariant maps between the universal-graph complexes and the bounded cross complexes.

collapse: +(i,A) -> +i and -(i,A) -> -i, from the box complex of universal(m, r) to the
bounded cross complex with all one-sided simplices (and the cell version between hom
complexes).

lift: a chain C with smallest element S+T and largest S'+T' goes to W+Z where
W = {(i,H): i in S, T' <= H} and Z = {(i,H): i in T, S' <= H}. It is checked on every
chain of simplices of the bounded cross complex (and every chain of cells of the bounded
hom complex).
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, TypeVar
import logging

from .box import (
    Cell, CellPoset, bounded_cross_complex, box_complex, hom_complex, sign_swap, split_signed,
    truncated_hom_complex,
)
from .families import parse_universal_label, universal
from .graph import Graph
from .simplicial import ComplexConfig, SimplicialComplex

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

Pair = Tuple[FrozenSet[int], FrozenSet[int]]


@dataclass
class MapReport:
    checked: int
    simplicial: bool
    equivariant: bool
    monotone: bool
    nonempty: bool

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def ok(self) -> bool:
        return self.simplicial and self.equivariant and self.monotone and self.nonempty


@dataclass
class SimplicialZ2Map:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Tuple[int, ...]
    is_simplicial: bool
    is_equivariant: bool
    checked: int = 0

    def report(self) -> MapReport:
        return MapReport(self.checked, self.is_simplicial, self.is_equivariant, True, True)


def _sweep(items: Sequence[T], check: Callable[[T], R], workers: int) -> List[R]:
    """Run check over items on a thread pool; results come back in input order."""
    results: List[Optional[R]] = [None] * len(items)
    if not items:
        return []
    chunk = max(1, len(items) // (4 * max(1, workers)))
    batches = [items[i:i + chunk] for i in range(0, len(items), chunk)]
    with ThreadPoolExecutor(max_workers=max(1, min(workers, len(batches)))) as executor:
        future_to_index = {
            executor.submit(lambda batch: [check(x) for x in batch], batch): i
            for i, batch in enumerate(batches)
        }
        for future in as_completed(future_to_index):
            index = future_to_index[future]
            for offset, value in enumerate(future.result()):
                results[index * chunk + offset] = value
    return results


class UniversalIndex:
    """Vertices of universal(m, r) as 0-based (i, H) pairs."""

    def __init__(self, m: int, r: int):
        self.m = m
        self.r = r
        self.graph: Graph = universal(m, r)
        self.vertices: List[Tuple[int, FrozenSet[int]]] = []
        for label in self.graph.labels:
            i, h = parse_universal_label(label)
            self.vertices.append((i - 1, frozenset(x - 1 for x in h)))

    def first(self, v: int) -> int:
        return self.vertices[v][0]

    def lift_side(self, firsts: FrozenSet[int], contained: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(v for v, (i, h) in enumerate(self.vertices) if i in firsts and contained <= h)

    def is_biclique(self, plus: FrozenSet[int], minus: FrozenSet[int]) -> bool:
        if plus & minus:
            return False
        return all(self.graph.has_edge(u, v) for u in plus for v in minus)


def _chains(elements: Sequence[T], less: Callable[[T, T], bool], budget: int) -> List[Tuple[T, ...]]:
    """Every nonempty chain, listed bottom to top."""
    above: Dict[int, List[int]] = {i: [j for j in range(len(elements)) if less(elements[i], elements[j])]
                                   for i in range(len(elements))}
    out: List[Tuple[int, ...]] = []
    stack = [(i,) for i in range(len(elements))]
    while stack:
        chain = stack.pop()
        out.append(chain)
        if len(out) > budget:
            raise ValueError(f"More than {budget} chains; raise the chain budget to continue")
        stack.extend(chain + (j,) for j in above[chain[-1]])
    out.sort(key=lambda c: (len(c), c))
    return [tuple(elements[i] for i in c) for c in out]


def collapse_map_check(m: int, r: int, config: Optional[ComplexConfig] = None) -> SimplicialZ2Map:
    """Check +(i,A) -> +i, -(i,A) -> -i on every facet of the box complex of universal(m, r)."""
    config = config or ComplexConfig()
    index = UniversalIndex(m, r)
    source = box_complex(index.graph)
    target = bounded_cross_complex(m, r, primed=True)
    n = index.graph.n
    vertex_map = tuple(index.first(v) if v < n else m + index.first(v - n) for v in range(2 * n))

    simplicial = all(_sweep(source.facets, lambda f: target.contains(vertex_map[v] for v in f), config.workers))
    src_nu, tgt_nu = sign_swap(n), sign_swap(m)
    equivariant = all(vertex_map[src_nu[v]] == tgt_nu[vertex_map[v]] for v in range(2 * n))
    logger.info(f"collapse({m},{r}): {len(source.facets)} facets, simplicial={simplicial}, equivariant={equivariant}")
    if not (simplicial and equivariant):
        raise RuntimeError(f"collapse({m},{r}) failed: simplicial={simplicial}, equivariant={equivariant}")
    return SimplicialZ2Map(source, target, vertex_map, simplicial, equivariant, len(source.facets))


def _lift(index: UniversalIndex, bottom: Pair, top: Pair) -> Pair:
    (s, t), (s_top, t_top) = bottom, top
    return index.lift_side(s, t_top), index.lift_side(t, s_top)


def _check_lift(chains: List[Tuple[Pair, ...]], index: UniversalIndex, cells_only: bool,
                workers: int, name: str) -> MapReport:
    images = _sweep(chains, lambda c: _lift(index, c[0], c[-1]), workers)
    image_of = dict(zip(chains, images))

    def valid(image: Pair) -> bool:
        w, z = image
        if cells_only and not (w and z):
            return False
        return index.is_biclique(w, z)

    def swap(pair: Pair) -> Pair:
        return pair[1], pair[0]

    simplicial = all(_sweep(images, valid, workers))
    nonempty = all(w or z for w, z in images)
    if cells_only:
        nonempty = all(w and z for w, z in images)
    equivariant = all(image_of[tuple(swap(p) for p in c)] == swap(image_of[c]) for c in chains)

    def covers_ok(chain: Tuple[Pair, ...]) -> bool:
        w, z = image_of[chain]
        for drop in range(len(chain)):
            smaller = chain[:drop] + chain[drop + 1:]
            if smaller:
                w_small, z_small = image_of[smaller]
                if not (w <= w_small and z <= z_small):
                    return False
        return True

    monotone = all(_sweep([c for c in chains if len(c) > 1], covers_ok, workers))
    report = MapReport(len(chains), simplicial, equivariant, monotone, nonempty)
    logger.info(f"{name}: {report.to_dict()}")
    if not report.ok:
        raise RuntimeError(f"{name} failed: {report.to_dict()}")
    return report


def chain_lift_check(m: int, r: int, config: Optional[ComplexConfig] = None) -> MapReport:
    """Check the lift on every chain of simplices of the bounded cross complex with one-sided simplices."""
    config = config or ComplexConfig()
    index = UniversalIndex(m, r)
    source = bounded_cross_complex(m, r, primed=True)
    simplices = [split_signed(s, m) for layer in source.simplices_by_dim() for s in layer]
    chains = _chains(simplices, lambda a, b: a != b and a[0] <= b[0] and a[1] <= b[1], config.chain_budget)
    logger.debug(f"lift({m},{r}): {len(simplices)} simplices, {len(chains)} chains")
    return _check_lift(chains, index, cells_only=False, workers=config.workers, name=f"lift({m},{r})")


def hom_collapse_check(m: int, r: int, config: Optional[ComplexConfig] = None) -> MapReport:
    """Cells (S, T) of the hom complex of universal(m, r) go to (first(S), first(T))."""
    config = config or ComplexConfig()
    index = UniversalIndex(m, r)
    source = hom_complex(index.graph)
    target = truncated_hom_complex(m, r)

    def image(cell: Cell) -> Cell:
        return Cell(frozenset(index.first(v) for v in cell.plus), frozenset(index.first(v) for v in cell.minus))

    images = _sweep(source.cells, image, config.workers)
    image_of = dict(zip(source.cells, images))
    simplicial = all(c in target for c in images)
    nonempty = all(c.plus and c.minus for c in images)
    equivariant = all(image_of[c.swapped()] == c_img.swapped() for c, c_img in image_of.items())
    monotone = all(image_of[face] <= image_of[c] for c in source.cells for face in source.boundary_faces(c))
    report = MapReport(len(source.cells), simplicial, equivariant, monotone, nonempty)
    logger.info(f"hom_collapse({m},{r}): {report.to_dict()}")
    if not report.ok:
        raise RuntimeError(f"hom_collapse({m},{r}) failed: {report.to_dict()}")
    return report


def hom_lift_check(m: int, r: int, config: Optional[ComplexConfig] = None) -> MapReport:
    """Check the lift on every chain of cells of the bounded hom complex; images must be cells."""
    config = config or ComplexConfig()
    index = UniversalIndex(m, r)
    poset: CellPoset = truncated_hom_complex(m, r)
    pairs = [(c.plus, c.minus) for c in poset.cells]
    chains = _chains(pairs, lambda a, b: a != b and a[0] <= b[0] and a[1] <= b[1], config.chain_budget)
    return _check_lift(chains, index, cells_only=True, workers=config.workers, name=f"hom_lift({m},{r})")
