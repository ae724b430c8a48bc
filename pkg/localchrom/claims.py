"""
Acceptance claims run by `localchrom verify paper`.

Each claim computes an exact (expected, actual) pair. A claim passes iff the two are equal.
A budget-exhausted search makes the claim `skipped_budget`, an exception makes it `fail`.
"""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple
import logging
import math
import time

from .core import (
    BUDGET, BudgetExceeded, Cell, Coloring, ComplexConfig, PointSource, SolverConfig,
    barycentric_subdivision, betti_gf2, bier_sphere, borsuk_sample, bounded_cross_complex,
    box_complex, cellular_betti, chain_lift_check, chromatic_number, collapse_map_check,
    complete_graph, cycle, edgeless, enumerate_proper_partitions, euler_characteristic,
    find_homomorphism, find_multicolored_biclique, fractional_chromatic, generalized_mycielski,
    hom_collapse_check, hom_lift_check, hom_order_complex, is_cycle, is_gf2_homology_sphere,
    is_isomorphic, kneser, link, local_chromatic_number, local_colorfulness,
    mycielski_extension_coloring, natural_coloring, neighborhood_complex, schrijver, simplex_facet_coloring, skeleton_complex,
    truncated_hom_complex, universal,
)

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED_BUDGET = "skipped_budget"
INFORMATIONAL = "informational"


@dataclass
class VerifyConfig:
    budget: Optional[int] = None
    workers: int = 4
    claims: Optional[List[str]] = None
    seed: int = 0


@dataclass
class ClaimReport:
    claim_id: str
    source: str
    expected: Any
    actual: Any
    status: str
    runtime_ms: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ClaimContext:
    solver: SolverConfig = field(default_factory=SolverConfig)
    complexes: ComplexConfig = field(default_factory=ComplexConfig)
    seed: int = 0


@dataclass
class Claim:
    claim_id: str
    source: str
    check: Callable[[ClaimContext], Tuple[Any, Any]]
    informational: bool = False


def _solved(result, what: str):
    if result.status == BUDGET:
        raise BudgetExceeded(f"{what}: {result.error}")
    return result


def _trim(values) -> List[int]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return values


def _reduced(k) -> List[int]:
    return _trim(betti_gf2(k, reduced=True).values)


def petersen():
    return kneser(5, 2)


def groetzsch():
    return generalized_mycielski(cycle(5), 2)


def hom_bounded_counts(ctx: ClaimContext):
    poset = truncated_hom_complex(5, 3)
    return ({"f_vector": [20, 60, 30], "euler": -10},
            {"f_vector": list(poset.f_vector().counts), "euler": euler_characteristic(poset)})


def hom_bounded_surface(ctx: ClaimContext):
    poset = truncated_hom_complex(5, 3)
    order = poset.order_complex(ctx.complexes.chain_budget)
    links_are_cycles = all(is_cycle(link(order, v)) for v in range(order.n))
    target = bounded_cross_complex(3, 2)
    cell = Cell(frozenset({3}), frozenset({4}))
    link_iso = is_isomorphic(poset.link(cell), target, ctx.complexes.isomorphism_limit) is not None
    return ({"betti": [1, 12, 1], "vertex_links_are_cycles": True, "link_4_5_is_bounded_3_2": True},
            {"betti": list(betti_gf2(order).values), "vertex_links_are_cycles": links_are_cycles,
             "link_4_5_is_bounded_3_2": link_iso})


def bounded_cross_spheres(ctx: ClaimContext):
    expected, actual = {}, {}
    for r in (2, 3, 4):
        m = 2 * r - 1
        expected[f"bounded({m},{r})"] = 2 * r - 3
        k = bounded_cross_complex(m, r)
        actual[f"bounded({m},{r})"] = 2 * r - 3 if is_gf2_homology_sphere(k, 2 * r - 3) else _reduced(k)
    return expected, actual


def complete_graph_spheres(ctx: ClaimContext):
    expected, actual = {}, {}
    for m in range(2, 6):
        g = complete_graph(m)
        expected[f"box(K{m})"] = m - 1
        expected[f"hom_chain(K{m})"] = m - 2
        box = box_complex(g)
        chain = hom_order_complex(g, ctx.complexes.chain_budget)
        actual[f"box(K{m})"] = m - 1 if is_gf2_homology_sphere(box, m - 1) else _reduced(box)
        actual[f"hom_chain(K{m})"] = m - 2 if is_gf2_homology_sphere(chain, m - 2) else _reduced(chain)
    return expected, actual


def suspension_shift(ctx: ClaimContext):
    expected, actual = {}, {}
    for g in (complete_graph(3), complete_graph(4), cycle(5)):
        box = betti_gf2(box_complex(g), reduced=True)
        chain = betti_gf2(hom_order_complex(g, ctx.complexes.chain_budget), reduced=True)
        expected[g.name] = _trim([0] + list(chain.values))
        actual[g.name] = _trim(box.values)
    return expected, actual


def neighborhood_vs_hom(ctx: ClaimContext):
    expected, actual = {}, {}
    for g in (complete_graph(4), cycle(5), petersen(), schrijver(6, 2)):
        expected[g.name] = _trim(betti_gf2(hom_order_complex(g, ctx.complexes.chain_budget)).values)
        actual[g.name] = _trim(betti_gf2(neighborhood_complex(g)).values)
    return expected, actual


def universal_5_3(ctx: ClaimContext):
    u = universal(5, 3)
    chi = _solved(chromatic_number(u, ctx.solver), "chi(U(5,3))")
    psi = _solved(local_chromatic_number(u, "direct", ctx.solver), "psi(U(5,3))")
    natural = natural_coloring(u)
    return ({"chi": 4, "psi": 3, "natural_colorfulness": 3, "natural_palette": 5},
            {"chi": chi.value, "psi": psi.value, "natural_colorfulness": local_colorfulness(u, natural),
             "natural_palette": natural.palette_size})


def schrijver_6_2(ctx: ClaimContext):
    g = schrijver(6, 2)
    psi = _solved(local_chromatic_number(g, "partitions", ctx.solver), "psi(SG(6,2))")
    chi = _solved(chromatic_number(g, ctx.solver), "chi(SG(6,2))")
    hom = _solved(find_homomorphism(g, universal(9, 3), ctx.solver), "SG(6,2) -> U(9,3)")
    return ({"psi": 4, "chi": 4, "hom_to_universal_9_3": False},
            {"psi": psi.value, "chi": chi.value, "hom_to_universal_9_3": hom.exists})


def groetzsch_numbers(ctx: ClaimContext):
    g = groetzsch()
    psi = _solved(local_chromatic_number(g, "partitions", ctx.solver), "psi(Groetzsch)")
    chi = _solved(chromatic_number(g, ctx.solver), "chi(Groetzsch)")
    return ({"vertices": 11, "edges": 20, "psi": 4, "chi": 4},
            {"vertices": g.n, "edges": g.edge_count(), "psi": psi.value, "chi": chi.value})


def zigzag_schrijver(ctx: ClaimContext):
    g = schrijver(6, 2)
    total = missing = 0
    for coloring in enumerate_proper_partitions(g, ctx.solver.partition_limit):
        total += 1
        if find_multicolored_biclique(g, coloring, 2, 2) is None:
            missing += 1
    logger.debug(f"Checked {total} proper partitions of {g.name}")
    return {"colorings_without_multicolored_K22": 0}, {"colorings_without_multicolored_K22": missing}


def schrijver_four_colorings(ctx: ClaimContext):
    g = schrijver(6, 2)
    sides = ((1, 1), (1, 2), (1, 3), (2, 2))
    checked = 0
    missing = {f"K{a}{b}": 0 for a, b in sides}
    for coloring in enumerate_proper_partitions(g, ctx.solver.partition_limit):
        if coloring.palette_size != 4:
            continue
        checked += 1
        for a, b in sides:
            if find_multicolored_biclique(g, coloring, a, b) is None:
                missing[f"K{a}{b}"] += 1
    logger.debug(f"Checked {checked} proper 4-colorings of {g.name}")
    return ({"some_checked": True, "colorings_without": {key: 0 for key in missing}},
            {"some_checked": checked > 0, "colorings_without": missing})


def mycielski_extension(ctx: ClaimContext):
    base = cycle(5)
    g = generalized_mycielski(base, 2)
    c = mycielski_extension_coloring(base, Coloring.of([0, 1, 0, 2, 3]))
    proper = g.violating_edge(c.colors) is None
    return ({"proper": True, "palette": 5, "multicolored_K14": False, "multicolored_K23": False,
             "multicolored_K22": True},
            {"proper": proper, "palette": c.palette_size,
             "multicolored_K14": find_multicolored_biclique(g, c, 1, 4) is not None,
             "multicolored_K23": find_multicolored_biclique(g, c, 2, 3) is not None,
             "multicolored_K22": find_multicolored_biclique(g, c, 2, 2) is not None})


def universal_maps(ctx: ClaimContext):
    expected, actual = {}, {}
    for m, r in ((3, 2), (5, 3)):
        collapse = collapse_map_check(m, r, ctx.complexes)
        lift = chain_lift_check(m, r, ctx.complexes)
        expected[f"collapse({m},{r})"] = {"simplicial": True, "equivariant": True}
        actual[f"collapse({m},{r})"] = {"simplicial": collapse.is_simplicial, "equivariant": collapse.is_equivariant}
        expected[f"lift({m},{r})"] = {"simplicial": True, "equivariant": True, "monotone": True, "nonempty": True}
        actual[f"lift({m},{r})"] = {"simplicial": lift.simplicial, "equivariant": lift.equivariant,
                                    "monotone": lift.monotone, "nonempty": lift.nonempty}
    return expected, actual


def bier_identity(ctx: ClaimContext):
    expected, actual = {}, {}
    for r in (2, 3):
        m = 2 * r - 1
        bier = bier_sphere(m, skeleton_complex(m, r - 1))
        bounded = bounded_cross_complex(m, r)
        expected[f"r={r}"] = True
        actual[f"r={r}"] = bier.labelled_facets() == bounded.labelled_facets()
    return expected, actual


def _coherence_corpus():
    return [complete_graph(4), cycle(5), cycle(6), petersen(), universal(3, 2), edgeless(3)]


def solver_coherence(ctx: ClaimContext):
    violations = []
    for g in _coherence_corpus():
        chi = _solved(chromatic_number(g, ctx.solver), f"chi({g.name})").value
        psis = {method: _solved(local_chromatic_number(g, method, ctx.solver), f"psi({g.name})").value
                for method in ("direct", "partitions", "hom_universal")}
        psi = psis["direct"]
        fchi = fractional_chromatic(g, ctx.solver) if g.n <= ctx.solver.fractional_limit else None
        if len(set(psis.values())) != 1:
            violations.append(f"{g.name}: psi methods disagree {psis}")
        if not psi <= chi or (fchi is not None and not fchi <= psi):
            violations.append(f"{g.name}: chi_f={fchi} psi={psi} chi={chi} out of order")
        if (psi == 2) != (chi == 2):
            violations.append(f"{g.name}: psi={psi} chi={chi} disagree on bipartiteness")
    complexes = [bounded_cross_complex(3, 2), box_complex(complete_graph(3)), neighborhood_complex(cycle(5)),
                 bounded_cross_complex(4, 2)]
    for k in complexes:
        if betti_gf2(k).values != betti_gf2(barycentric_subdivision(k, ctx.complexes.chain_budget)).values:
            violations.append(f"{k.name}: Betti numbers change under subdivision")
    return [], violations


def small_universal_chromatic(ctx: ClaimContext):
    expected, actual, values = {}, {}, {}
    for m, r in ((3, 2), (4, 2), (4, 3), (5, 3)):
        chi = values[(m, r)] = _solved(chromatic_number(universal(m, r), ctx.solver), f"chi(U({m},{r}))").value
        expected[f"chi(U({m},{r})) < {m}"] = True
        actual[f"chi(U({m},{r})) < {m}"] = chi < m
    expected["chi(U(4,3))"] = 3
    actual["chi(U(4,3))"] = values[(4, 3)]
    return expected, actual


def natural_biclique_profile(ctx: ClaimContext):
    u = universal(5, 3)
    c = natural_coloring(u)
    return ({"multicolored_K22": True, "multicolored_K13": False},
            {"multicolored_K22": find_multicolored_biclique(u, c, 2, 2) is not None,
             "multicolored_K13": find_multicolored_biclique(u, c, 1, 3) is not None})


def psi_witness_palette(ctx: ClaimContext):
    u = universal(5, 3)
    psi = _solved(local_chromatic_number(u, "direct", ctx.solver), "psi(U(5,3))")
    return {"palette_at_least_5": True}, {"palette_at_least_5": psi.coloring.palette_size >= 5}


def borsuk_circle(ctx: ClaimContext):
    source = PointSource.circle_uniform(12)
    sharp = borsuk_sample(2, 1.9, source)
    chi = _solved(chromatic_number(sharp, ctx.solver), "chi(Borsuk 1.9)").value
    psi = _solved(local_chromatic_number(sharp, "direct", ctx.solver), "psi(Borsuk 1.9)").value
    facet = simplex_facet_coloring(sharp, 2)

    near = borsuk_sample(2, 1.99, source)
    threshold = 2 * math.asin(0.995)
    angular = [[min(abs(a - b), 12 - abs(a - b)) * 2 * math.pi / 12 for b in range(12)] for a in range(12)]
    recomputed = sorted((a, b) for a in range(12) for b in range(a + 1, 12) if angular[a][b] >= threshold - 1e-12)
    return ({"chi": 3, "psi": 3, "facet_coloring_proper": True, "near_antipodal_edges_match": True},
            {"chi": chi, "psi": psi, "facet_coloring_proper": facet.proper,
             "near_antipodal_edges_match": near.edges() == recomputed})


def hom_space_maps(ctx: ClaimContext):
    expected, actual = {}, {}
    for m, r in ((3, 2), (5, 3)):
        for name, check in (("hom_collapse", hom_collapse_check), ("hom_lift", hom_lift_check)):
            report = check(m, r, ctx.complexes)
            expected[f"{name}({m},{r})"] = True
            actual[f"{name}({m},{r})"] = report.ok
    return expected, actual


def hom_bounded_links(ctx: ClaimContext):
    poset = truncated_hom_complex(5, 3)
    target = bounded_cross_complex(3, 2)
    vertices = poset.vertices()
    iso = sum(1 for c in vertices if is_isomorphic(poset.link(c), target, ctx.complexes.isomorphism_limit) is not None)
    return ({"connected": True, "vertex_cells": 20, "links_isomorphic_to_bounded_3_2": 20,
             "cellular_betti_matches": True},
            {"connected": poset.is_connected(), "vertex_cells": len(vertices),
             "links_isomorphic_to_bounded_3_2": iso,
             "cellular_betti_matches": cellular_betti(poset).values == betti_gf2(poset).values})


def _informational(text: str) -> Callable[[ClaimContext], Tuple[Any, Any]]:
    return lambda ctx: (text, "not computed")


CLAIMS: List[Claim] = [
    Claim("01-hom-bounded-counts", "bounded hom complex (5,3): cell counts and Euler characteristic", hom_bounded_counts),
    Claim("02-hom-bounded-surface", "bounded hom complex (5,3): genus-6 surface, vertex links", hom_bounded_surface),
    Claim("03-bounded-cross-spheres", "bounded cross complex L(2r-1,r) is a sphere of dimension 2r-3", bounded_cross_spheres),
    Claim("04-complete-graph-spheres", "box complex of K_m is S^(m-1), hom space is S^(m-2)", complete_graph_spheres),
    Claim("05-suspension-shift", "box complex is the suspension of the hom space (homology)", suspension_shift),
    Claim("06-neighborhood-vs-hom", "neighborhood complex and hom space have equal homology", neighborhood_vs_hom),
    Claim("07-universal-5-3", "chromatic and local chromatic number of U(5,3)", universal_5_3),
    Claim("08-schrijver-6-2", "Schrijver graph SG(6,2) has local chromatic number 4", schrijver_6_2),
    Claim("09-groetzsch", "Groetzsch graph has local chromatic number 4", groetzsch_numbers),
    Claim("10-zigzag-schrijver", "every proper coloring of SG(6,2) has a multicolored K_{2,2}", zigzag_schrijver),
    Claim("11-universal-maps", "collapse and lift maps between B0(U(m,r)) and L'(m,r)", universal_maps),
    Claim("12-bier-identity", "L(2r-1,r) is the Bier sphere of the (r-1)-subsets", bier_identity),
    Claim("13-solver-coherence", "chi_f <= psi <= chi, methods agree, subdivision invariance", solver_coherence),
    Claim("14-small-universal-chromatic", "chi(U(m,r)) < m for m > r", small_universal_chromatic),
    Claim("15-natural-biclique-profile", "natural coloring of U(5,3): multicolored K_{2,2}, no K_{1,3}", natural_biclique_profile),
    Claim("16-psi-witness-palette", "a psi-optimal coloring of U(5,3) uses more than chi colors", psi_witness_palette),
    Claim("17-borsuk-circle", "12-point Borsuk circle graphs", borsuk_circle),
    Claim("18-hom-space-maps", "collapse and lift between Hom(K2,U(m,r)) and the bounded hom complex", hom_space_maps),
    Claim("19-hom-bounded-links", "bounded hom complex (5,3): connected, links are L(3,2), cellular homology", hom_bounded_links),
    Claim("20-schrijver-four-colorings", "every proper 4-coloring of SG(6,2) has multicolored K_{k,l} for k+l <= 4",
          schrijver_four_colorings),
    Claim("21-mycielski-extension-coloring", "layered 5-coloring of the Groetzsch graph: K_{2,2} but no K_{1,4} or K_{2,3}",
          mycielski_extension),
    Claim("90-cover-numbers", "sphere cover numbers Q(h) = floor(h/2) + 2",
          _informational("continuous covers of spheres; replaced by the Borsuk circle and Schrijver instances"), True),
    Claim("91-index-coindex", "Z2-index and coindex of the box complexes",
          _informational("no algorithm for Z2-(co)index; replaced by the homology-sphere claims 03-05"), True),
    Claim("92-general-lower-bound", "psi >= floor(t/2) + 2 for topologically t-chromatic graphs",
          _informational("general statement; replaced by instances 08-10 and 15"), True),
]

CLAIM_IDS = [claim.claim_id for claim in CLAIMS]


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def run_claim(claim: Claim, ctx: ClaimContext) -> ClaimReport:
    start = time.perf_counter()
    try:
        expected, actual = claim.check(ctx)
        if claim.informational:
            status = INFORMATIONAL
        else:
            status = PASS if expected == actual else FAIL
    except BudgetExceeded as e:
        logger.warning(f"Claim {claim.claim_id} ran out of budget: {e}")
        expected, actual, status = None, f"budget exceeded: {e}", SKIPPED_BUDGET
    except Exception as e:
        logger.error(f"Claim {claim.claim_id} raised: {e}", exc_info=True)
        expected, actual, status = None, f"error: {e}", FAIL
    runtime_ms = int((time.perf_counter() - start) * 1000)
    logger.info(f"Claim {claim.claim_id}: {status} ({runtime_ms} ms)")
    return ClaimReport(claim.claim_id, claim.source, _jsonable(expected), _jsonable(actual), status, runtime_ms)


def select_claims(ids: Optional[List[str]]) -> List[Claim]:
    if not ids:
        return list(CLAIMS)
    unknown = [i for i in ids if i not in CLAIM_IDS]
    if unknown:
        raise ValueError(f"Unknown claim ids {unknown}; known ids are {CLAIM_IDS}")
    return [claim for claim in CLAIMS if claim.claim_id in ids]
