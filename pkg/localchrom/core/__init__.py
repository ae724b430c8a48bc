from .graph import Graph, Coloring, HomomorphismMap, Rational, SolverConfig, ChromaticResult, LocalChromaticResult, HomomorphismResult, check_proper, local_colorfulness, neighborhood_color_counts, SOLVED, INFEASIBLE, BUDGET
from .search import BudgetExceeded, find_homomorphism, chromatic_number, local_chromatic_number, enumerate_proper_partitions, find_multicolored_biclique, clique_number, greedy_coloring, local_lower_bound, METHODS
from .lp import fractional_chromatic, solve_fractional, maximal_independent_sets, FractionalResult
from .cnf import CNF, hom_cnf, export_hom_cnf, parse_dimacs, hom_variable
from .families import complete_graph, cycle, edgeless, kneser, schrijver, universal, natural_coloring, generalized_mycielski, mycielski_extension_coloring, borsuk_sample, simplex_facet_coloring, regular_simplex, PointSource, FacetColoringResult, parse_universal_label, parse_subset_label
from .simplicial import SimplicialComplex, Z2Structure, FVector, ComplexConfig, barycentric_subdivision, link, suspension, is_isomorphic, connected_components, is_cycle, skeleton_complex
from .box import Cell, CellPoset, maximal_bicliques, box_complex, hom_complex, hom_order_complex, neighborhood_complex, bounded_cross_complex, bier_sphere, truncated_hom_complex
from .homology import ChainComplexGF2, BettiVector, chain_complex, cellular_chain_complex, gf2_rank, betti_gf2, cellular_betti, euler_characteristic, is_gf2_homology_sphere
from .maps import MapReport, SimplicialZ2Map, collapse_map_check, chain_lift_check, hom_collapse_check, hom_lift_check
from .serialize import load_any, load_graph, write_json, to_dict, from_dict

__all__ = [name for name in globals() if not name.startswith('__')]
__version__ = "0.1.0"

"""
Graphs, exact solvers, complexes and GF(2) homology.
"""
