import click
import typer
import json
from pathlib import Path
from typing import Any, Optional

from typer.core import TyperGroup


class UsageExitGroup(TyperGroup):
    """Usage errors exit 1; exit code 2 means a search ran out of budget."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise


app = typer.Typer(name="localchrom", help="Local chromatic number, box complexes and GF(2) homology.",
                  cls=UsageExitGroup)
verify_app = typer.Typer(help="Acceptance suites")
app.add_typer(verify_app, name="verify")

FAMILIES = ["complete", "cycle", "kneser", "schrijver", "universal", "mycielski", "borsuk"]
KINDS = ["b0", "bchain", "neigh", "lmr", "lmr-prime", "bier", "hhat"]


def _print_json(data: Any):
    typer.echo(json.dumps(data, indent=2))


def _fail(e: Exception, code: int = 1):
    typer.echo(f"❌ Error: {e}", err=True)
    raise typer.Exit(code)


def _crash(e: Exception):
    typer.echo(f"❌ Command failed: {e}", err=True)
    typer.echo(f"   📋 Full error details:", err=True)
    import traceback
    typer.echo(traceback.format_exc(), err=True)
    raise typer.Exit(1)


def _settings(config_path: Optional[str]):
    from .main import load_config
    return load_config(config_path).get_pipeline_configs()


def _require(value: Optional[int], name: str, what: str) -> int:
    if value is None:
        raise ValueError(f"--{name} is required for {what}")
    return value


def _emit(artifact, out: Optional[Path]):
    from .core import write_json, to_dict
    if out is None:
        _print_json(to_dict(artifact))
    else:
        path = write_json(artifact, out)
        typer.echo(f"✅ Wrote {artifact.name} to {path}", err=True)


def _complex_input(path: Path):
    from .core import load_any, Graph
    artifact = load_any(path)
    if isinstance(artifact, Graph):
        raise ValueError(f"{path} holds a graph; expected a complex or a cell poset")
    return artifact


ConfigOption = typer.Option("config.yaml", "--config", "-c", help="Path to configuration file")


@app.command()
def gen(
    family: str = typer.Option(..., "--family", "-f", help=f"One of {', '.join(FAMILIES)}"),
    m: Optional[int] = typer.Option(None, "--m", help="complete / universal: size of the color set"),
    n: Optional[int] = typer.Option(None, "--n", help="cycle length, Kneser/Schrijver ground set, Mycielski base cycle"),
    k: Optional[int] = typer.Option(None, "--k", help="Kneser/Schrijver subset size"),
    r: Optional[int] = typer.Option(None, "--r", help="universal: bound on the second coordinate"),
    levels: int = typer.Option(2, "--levels", help="mycielski: number of levels (2 is the classical one)"),
    graph: Optional[Path] = typer.Option(None, "--graph", help="mycielski: base graph JSON instead of a cycle"),
    dim: int = typer.Option(2, "--dim", help="borsuk: ambient dimension"),
    alpha: float = typer.Option(1.9, "--alpha", help="borsuk: distance threshold in (0, 2)"),
    points: int = typer.Option(12, "--points", help="borsuk: number of sample points"),
    seed: Optional[int] = typer.Option(None, "--seed", help="borsuk: sampling seed (dimension >= 3)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)"),
    config_path: Optional[str] = ConfigOption
):
    """
    Generate a graph from one of the built-in families.
    """
    from .core import (
        complete_graph, cycle, kneser, schrijver, universal, generalized_mycielski,
        borsuk_sample, PointSource, load_graph,
    )
    try:
        if family == "complete":
            g = complete_graph(_require(m, "m", family))
        elif family == "cycle":
            g = cycle(_require(n, "n", family))
        elif family == "kneser":
            g = kneser(_require(n, "n", family), _require(k, "k", family))
        elif family == "schrijver":
            g = schrijver(_require(n, "n", family), _require(k, "k", family))
        elif family == "universal":
            g = universal(_require(m, "m", family), _require(r, "r", family))
        elif family == "mycielski":
            base = load_graph(graph) if graph is not None else cycle(_require(n, "n", "mycielski without --graph"))
            g = generalized_mycielski(base, levels)
        elif family == "borsuk":
            if seed is None:
                seed = _settings(config_path)["seed"]
            source = PointSource.circle_uniform(points) if dim == 2 else PointSource.sphere_seeded(points, seed)
            g = borsuk_sample(dim, alpha, source)
        else:
            raise ValueError(f"Unknown family '{family}', expected one of {FAMILIES}")
        _emit(g, out)
    except ValueError as e:
        _fail(e)
    except typer.Exit:
        raise
    except Exception as e:
        _crash(e)


@app.command()
def chi(
    graph: Path = typer.Argument(..., help="Graph JSON"),
    config_path: Optional[str] = ConfigOption
):
    """
    Exact chromatic number with a witness coloring.
    """
    from .core import load_graph, chromatic_number, BUDGET
    try:
        g = load_graph(graph)
        result = chromatic_number(g, _settings(config_path)["solver"])
        _print_json({
            "graph": g.name, "chi": result.value, "status": result.status, "nodes": result.nodes,
            "lower_bound": result.lower_bound, "upper_bound": result.upper_bound,
            "coloring": list(result.coloring.colors) if result.coloring else None,
        })
        if result.status == BUDGET:
            raise typer.Exit(2)
    except ValueError as e:
        _fail(e)
    except typer.Exit:
        raise
    except Exception as e:
        _crash(e)


@app.command()
def psi(
    graph: Path = typer.Argument(..., help="Graph JSON"),
    method: str = typer.Option("direct", "--method", "-m", help="direct, partitions or hom-universal"),
    config_path: Optional[str] = ConfigOption
):
    """
    Exact local chromatic number with a witness coloring.
    """
    from .core import load_graph, local_chromatic_number, local_colorfulness, BUDGET
    try:
        g = load_graph(graph)
        result = local_chromatic_number(g, method.replace("-", "_"), _settings(config_path)["solver"])
        _print_json({
            "graph": g.name, "psi": result.value, "status": result.status, "method": method,
            "nodes": result.nodes,
            "coloring": list(result.coloring.colors) if result.coloring else None,
            "palette": result.coloring.palette_size if result.coloring else None,
            "colorfulness": local_colorfulness(g, result.coloring) if result.coloring else None,
        })
        if result.status == BUDGET:
            raise typer.Exit(2)
    except ValueError as e:
        _fail(e)
    except typer.Exit:
        raise
    except Exception as e:
        _crash(e)


@app.command()
def fchi(
    graph: Path = typer.Argument(..., help="Graph JSON"),
    config_path: Optional[str] = ConfigOption
):
    """
    Exact fractional chromatic number with its certificate.
    """
    from .core import load_graph, solve_fractional
    try:
        g = load_graph(graph)
        result = solve_fractional(g, _settings(config_path)["solver"])
        _print_json({
            "graph": g.name, "fchi": str(result.value),
            "independent_sets": [list(s) for s in result.independent_sets],
            "weights": [str(w) for w in result.weights],
            "pivots": result.pivots,
        })
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)


@app.command()
def hom(
    source: Path = typer.Argument(..., help="Source graph JSON"),
    target: Path = typer.Argument(..., help="Target graph JSON"),
    cnf_out: Optional[Path] = typer.Option(None, "--cnf-out", help="Also write the DIMACS encoding here"),
    config_path: Optional[str] = ConfigOption
):
    """
    Decide whether an edge-preserving map exists from one graph into another.
    """
    from .core import load_graph, find_homomorphism, export_hom_cnf, BUDGET
    try:
        g, h = load_graph(source), load_graph(target)
        if cnf_out is not None:
            cnf_out.parent.mkdir(parents=True, exist_ok=True)
            cnf_out.write_text(export_hom_cnf(g, h), encoding="utf-8")
            typer.echo(f"✅ Wrote DIMACS to {cnf_out}", err=True)
        result = find_homomorphism(g, h, _settings(config_path)["solver"])
        mapping = None
        if result.mapping is not None:
            mapping = {g.labels[v]: h.labels[a] for v, a in enumerate(result.mapping.image)}
        _print_json({"source": g.name, "target": h.name, "exists": result.exists,
                     "status": result.status, "nodes": result.nodes, "map": mapping})
        if result.status == BUDGET:
            raise typer.Exit(2)
    except ValueError as e:
        _fail(e)
    except typer.Exit:
        raise
    except Exception as e:
        _crash(e)


@app.command("complex")
def build_complex(
    kind: str = typer.Option(..., "--kind", "-k", help=f"One of {', '.join(KINDS)}"),
    graph: Optional[Path] = typer.Option(None, "--graph", help="Graph JSON for b0, bchain and neigh"),
    m: Optional[int] = typer.Option(None, "--m", help="Ground set size for lmr, lmr-prime, bier and hhat"),
    r: Optional[int] = typer.Option(None, "--r", help="Side bound for lmr, lmr-prime, bier and hhat"),
    size: Optional[int] = typer.Option(None, "--size", help="bier: largest subset in the input complex (default r-1)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)"),
    config_path: Optional[str] = ConfigOption
):
    """
    Build a graph complex or one of the bounded complexes.
    """
    from .core import (
        load_graph, box_complex, hom_order_complex, neighborhood_complex,
        bounded_cross_complex, bier_sphere, skeleton_complex, truncated_hom_complex,
    )
    try:
        if kind in ("b0", "bchain", "neigh"):
            if graph is None:
                raise ValueError(f"--graph is required for --kind {kind}")
            g = load_graph(graph)
            if kind == "b0":
                artifact = box_complex(g)
            elif kind == "bchain":
                artifact = hom_order_complex(g, _settings(config_path)["complexes"].chain_budget)
            else:
                artifact = neighborhood_complex(g)
        elif kind in ("lmr", "lmr-prime"):
            artifact = bounded_cross_complex(_require(m, "m", kind), _require(r, "r", kind), primed=kind == "lmr-prime")
        elif kind == "bier":
            m_value = _require(m, "m", kind)
            if size is None:
                size = _require(r, "r", "bier without --size") - 1
            artifact = bier_sphere(m_value, skeleton_complex(m_value, size))
        elif kind == "hhat":
            artifact = truncated_hom_complex(_require(m, "m", kind), _require(r, "r", kind))
        else:
            raise ValueError(f"Unknown kind '{kind}', expected one of {KINDS}")
        _emit(artifact, out)
    except ValueError as e:
        _fail(e)
    except typer.Exit:
        raise
    except Exception as e:
        _crash(e)


@app.command()
def homology(
    path: Path = typer.Argument(..., help="Complex or cell poset JSON"),
    reduced: bool = typer.Option(False, "--reduced", help="Reduced Betti numbers"),
    config_path: Optional[str] = ConfigOption
):
    """
    f-vector, Euler characteristic and GF(2) Betti numbers.
    """
    from .core import betti_gf2, euler_characteristic
    try:
        k = _complex_input(path)
        _print_json({
            "f_vector": list(k.f_vector().counts),
            "euler": euler_characteristic(k),
            "betti": betti_gf2(k, reduced=reduced).to_list(),
            "reduced": reduced,
        })
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)


@app.command()
def euler(
    path: Path = typer.Argument(..., help="Complex or cell poset JSON"),
):
    """
    Euler characteristic from the face (or cell) counts.
    """
    from .core import euler_characteristic
    try:
        _print_json({"euler": euler_characteristic(_complex_input(path))})
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)


@app.command("link")
def vertex_link(
    path: Path = typer.Argument(..., help="Complex or cell poset JSON"),
    vertex: str = typer.Option(..., "--vertex", help="Vertex label (a cell label such as {1}|{2} for posets)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (stdout if omitted)"),
):
    """
    Link of a vertex.
    """
    from .core import link as link_of, CellPoset
    try:
        k = _complex_input(path)
        if isinstance(k, CellPoset):
            matches = [c for c in k.cells if k.label(c) == vertex]
            if not matches:
                raise ValueError(f"Poset '{k.name}' has no cell labelled '{vertex}'")
            result = k.link(matches[0])
        else:
            result = link_of(k, k.index_of(vertex))
        _emit(result, out)
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)


@app.command()
def iso(
    first: Path = typer.Argument(..., help="Complex JSON"),
    second: Path = typer.Argument(..., help="Complex JSON"),
    config_path: Optional[str] = ConfigOption
):
    """
    Decide whether two complexes are isomorphic, with a vertex bijection.
    """
    from .core import is_isomorphic, CellPoset
    try:
        k1, k2 = _complex_input(first), _complex_input(second)
        k1 = k1.order_complex() if isinstance(k1, CellPoset) else k1
        k2 = k2.order_complex() if isinstance(k2, CellPoset) else k2
        mapping = is_isomorphic(k1, k2, _settings(config_path)["complexes"].isomorphism_limit)
        _print_json({
            "isomorphic": mapping is not None,
            "vertex_map": {k1.labels[v]: k2.labels[w] for v, w in sorted(mapping.items())} if mapping else None,
        })
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)


def _map_checks(space: str, m: int, r: int, complexes) -> dict:
    from .core import collapse_map_check, chain_lift_check, hom_collapse_check, hom_lift_check
    if space == "box":
        collapse = collapse_map_check(m, r, complexes).report()
        lift = chain_lift_check(m, r, complexes)
    elif space == "hom":
        collapse = hom_collapse_check(m, r, complexes)
        lift = hom_lift_check(m, r, complexes)
    else:
        raise ValueError(f"Unknown space '{space}', expected box or hom")
    return {"collapse": collapse.to_dict(), "lift": lift.to_dict()}


@app.command()
def maps(
    m: int = typer.Option(..., "--m", help="Color set size of the universal graph"),
    r: int = typer.Option(..., "--r", help="Bound on the second coordinate"),
    space: str = typer.Option("box", "--space", help="box: B0(U(m,r)) vs the bounded cross complex; hom: Hom(K2,U(m,r)) vs the bounded hom complex"),
    lemma7: bool = typer.Option(False, "--lemma7", help="Check the collapse map f and the lift g on both spaces"),
    config_path: Optional[str] = ConfigOption
):
    """
    Check the collapse and lift maps between the universal-graph complexes and the bounded ones.
    """
    try:
        complexes = _settings(config_path)["complexes"]
        if lemma7:
            _print_json({"m": m, "r": r, **{s: _map_checks(s, m, r, complexes) for s in ("box", "hom")}})
        else:
            _print_json({"m": m, "r": r, "space": space, **_map_checks(space, m, r, complexes)})
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)


@verify_app.command("paper")
def verify_paper(
    budget: Optional[int] = typer.Option(None, "--budget", "-b", help="Node budget per search"),
    as_json: bool = typer.Option(False, "--json", help="Print the claim reports as a JSON array"),
    claims: Optional[str] = typer.Option(None, "--claims", help="Comma-separated claim ids to run"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
    config_path: Optional[str] = ConfigOption
):
    """
    Run the acceptance claims and report pass / fail / skipped_budget per claim.

    Exit code: 0 when all pass, 1 on any failure, 2 when a search ran out of budget.
    """
    try:
        from .main import run_verification

        if not as_json:
            typer.echo(f"🚀 Running acceptance claims with config: {config_path}", err=True)
        selected = [c.strip() for c in claims.split(",") if c.strip()] if claims else None
        reports, code = run_verification(config_path, budget, selected, verbose)
    except ValueError as e:
        _fail(e)
    except Exception as e:
        _crash(e)

    if as_json:
        _print_json([report.to_dict() for report in reports])
    else:
        marks = {"pass": "✅", "fail": "❌", "skipped_budget": "⏳", "informational": "ℹ️ "}
        for report in reports:
            typer.echo(f"{marks.get(report.status, '?')} {report.claim_id:<32} {report.status:<15} {report.runtime_ms:>8} ms")
            if report.status == "fail":
                typer.echo(f"   expected: {json.dumps(report.expected)}")
                typer.echo(f"   actual:   {json.dumps(report.actual)}")
    if code == 0 and not as_json:
        typer.echo("✅ All claims passed", err=True)
    raise typer.Exit(code)


if __name__ == "__main__":
    app()
