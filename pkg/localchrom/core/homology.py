"""
GF(2) chain complexes, Betti numbers, Euler characteristics and homology-sphere tests.

Columns of boundary matrices are Python ints used as bitsets over the basis of the
dimension below. Elimination keeps a pivot table keyed by each column's lowest set bit.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union
import logging

from .box import CellPoset
from .simplicial import SimplicialComplex

logger = logging.getLogger(__name__)


def _low(column: int) -> int:
    return (column & -column).bit_length() - 1


def gf2_rank(columns: Sequence[int]) -> int:
    pivots: Dict[int, int] = {}
    for column in columns:
        while column:
            low = _low(column)
            if low not in pivots:
                pivots[low] = column
                break
            column ^= pivots[low]
    return len(pivots)


@dataclass
class ChainComplexGF2:
    """bases[d] lists the d-cells; boundaries[d] holds one bitset column per d-cell (d >= 1)."""
    bases: List[List[object]]
    boundaries: List[List[int]]

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def rank(self, d: int) -> int:
        if not 1 <= d <= self.top:
            return 0
        return gf2_rank(self.boundaries[d])

    def check_boundary_squared(self) -> bool:
        for d in range(2, self.top + 1):
            lower = self.boundaries[d - 1]
            for column in self.boundaries[d]:
                image = 0
                while column:
                    low = _low(column)
                    image ^= lower[low]
                    column ^= 1 << low
                if image:
                    return False
        return True


@dataclass(frozen=True)
class BettiVector:
    reduced: bool
    values: Tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        return self.values[d] if 0 <= d < len(self.values) else 0

    @property
    def euler(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self.values)) + (1 if self.reduced else 0)

    def to_list(self) -> List[int]:
        return list(self.values)


def chain_complex(k: SimplicialComplex) -> ChainComplexGF2:
    bases = k.simplices_by_dim()
    boundaries: List[List[int]] = [[]]
    for d in range(1, len(bases)):
        position = {s: i for i, s in enumerate(bases[d - 1])}
        columns = []
        for s in bases[d]:
            column = 0
            for drop in range(len(s)):
                column |= 1 << position[s[:drop] + s[drop + 1:]]
            columns.append(column)
        boundaries.append(columns)
    chains = ChainComplexGF2([list(b) for b in bases], boundaries)
    if not chains.check_boundary_squared():
        raise RuntimeError(f"Boundary of boundary is nonzero for '{k.name}'")
    return chains


def cellular_chain_complex(poset: CellPoset) -> ChainComplexGF2:
    """Cells S+T are products of two simplices; the boundary drops one element from a side of size >= 2."""
    by_dim: List[List] = [[] for _ in range(poset.dim() + 1)]
    for cell in poset.cells:
        by_dim[poset.cell_dim(cell)].append(cell)
    boundaries: List[List[int]] = [[]]
    for d in range(1, len(by_dim)):
        position = {c: i for i, c in enumerate(by_dim[d - 1])}
        boundaries.append([sum(1 << position[face] for face in poset.boundary_faces(c)) for c in by_dim[d]])
    chains = ChainComplexGF2(by_dim, boundaries)
    if not chains.check_boundary_squared():
        raise RuntimeError(f"Cellular boundary of boundary is nonzero for '{poset.name}'")
    return chains


def _betti_from_chains(chains: ChainComplexGF2, reduced: bool) -> BettiVector:
    ranks = [chains.rank(d) for d in range(chains.top + 2)]
    values = []
    for d in range(chains.top + 1):
        nullity = len(chains.bases[d]) - (ranks[d] if d >= 1 else 0)
        values.append(nullity - ranks[d + 1])
    if reduced and values:
        values[0] -= 1
    return BettiVector(reduced, tuple(values))


ComplexLike = Union[SimplicialComplex, CellPoset]


def betti_gf2(k: ComplexLike, reduced: bool = False) -> BettiVector:
    """Mod-2 Betti numbers; cell posets go through their order complex."""
    if isinstance(k, CellPoset):
        k = k.order_complex()
    if k.is_empty():
        return BettiVector(reduced, ())
    betti = _betti_from_chains(chain_complex(k), reduced)
    logger.debug(f"Betti{'~' if reduced else ''}({k.name}) = {betti.values}")
    return betti


def cellular_betti(poset: CellPoset, reduced: bool = False) -> BettiVector:
    return _betti_from_chains(cellular_chain_complex(poset), reduced)


def euler_characteristic(k: ComplexLike) -> int:
    if isinstance(k, CellPoset):
        value = k.euler()
        through_order = k.order_complex().euler()
        if value != through_order:
            raise RuntimeError(f"Cell count Euler characteristic {value} of '{k.name}' differs from its order complex ({through_order})")
        return value
    return k.euler()


def is_gf2_homology_sphere(k: ComplexLike, d: int) -> bool:
    betti = betti_gf2(k, reduced=True)
    return all(b == (1 if i == d else 0) for i, b in enumerate(betti.values)) and betti[d] == 1
