"""
JSON formats for graphs, simplicial complexes and cell posets.
"""

from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, Union
import json
import logging

from .box import Cell, CellPoset
from .graph import Graph
from .simplicial import SimplicialComplex

logger = logging.getLogger(__name__)

Artifact = Union[Graph, SimplicialComplex, CellPoset]


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    data = {"name": g.name, "labels": list(g.labels), "edges": [list(e) for e in g.edges()]}
    if g.transitive:
        data["vertex_transitive"] = True
    return data


def graph_from_dict(data: Dict[str, Any]) -> Graph:
    try:
        labels = data["labels"]
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as e:
        raise ValueError(f"Graph JSON needs 'labels' and 'edges': {e}")
    if any(len(e) != 2 for e in edges):
        raise ValueError("Graph JSON edges must be pairs [u, v]")
    g = Graph.from_edges(labels, edges, name=data.get("name", "graph"))
    if data.get("vertex_transitive", False):
        if not g.is_vertex_transitive():
            raise ValueError(f"Graph '{g.name}' is marked vertex_transitive but its automorphisms do not reach every vertex")
        g = replace(g, transitive=True)
    return g


def complex_to_dict(k: SimplicialComplex) -> Dict[str, Any]:
    data = {"name": k.name, "vertices": list(k.labels), "facets": [list(f) for f in k.facets]}
    if k.involution is not None:
        data["involution"] = list(k.involution)
    return data


def complex_from_dict(data: Dict[str, Any]) -> SimplicialComplex:
    try:
        return SimplicialComplex.from_facets(data["vertices"], data["facets"], data.get("name", "complex"),
                                             data.get("involution"))
    except (KeyError, TypeError) as e:
        raise ValueError(f"Complex JSON needs 'vertices' and 'facets': {e}")


def poset_to_dict(p: CellPoset) -> Dict[str, Any]:
    return {"name": p.name, "ground": list(p.ground_labels),
            "cells": [[sorted(c.plus), sorted(c.minus)] for c in p.cells]}


def poset_from_dict(data: Dict[str, Any]) -> CellPoset:
    try:
        cells = [Cell(frozenset(s), frozenset(t)) for s, t in data["cells"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"Cell poset JSON needs 'cells' as [[S],[T]] pairs: {e}")
    ground = data.get("ground")
    if ground is None:
        size = 1 + max((v for c in cells for v in c.plus | c.minus), default=-1)
        ground = [str(i + 1) for i in range(size)]
    return CellPoset(ground, cells, data.get("name", "cells"))


def to_dict(artifact: Artifact) -> Dict[str, Any]:
    if isinstance(artifact, Graph):
        return graph_to_dict(artifact)
    if isinstance(artifact, SimplicialComplex):
        return complex_to_dict(artifact)
    if isinstance(artifact, CellPoset):
        return poset_to_dict(artifact)
    raise TypeError(f"Cannot serialize {type(artifact).__name__}")


def from_dict(data: Dict[str, Any]) -> Artifact:
    """Dispatch on the keys: 'edges' is a graph, 'facets' a complex, 'cells' a cell poset."""
    if "edges" in data:
        return graph_from_dict(data)
    if "facets" in data:
        return complex_from_dict(data)
    if "cells" in data:
        return poset_from_dict(data)
    raise ValueError(f"Unrecognised JSON object with keys {sorted(data)}")


def write_json(artifact: Artifact, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(to_dict(artifact), indent=2) + "\n", encoding="utf-8")
    logger.debug(f"Wrote {type(artifact).__name__} '{artifact.name}' to {path}")
    return path


def load_any(path: Union[str, Path]) -> Artifact:
    path = Path(path)
    if not path.exists():
        raise ValueError(f"File not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValueError(f"{path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ValueError(f"{path} must hold a JSON object")
    return from_dict(data)


def load_graph(path: Union[str, Path]) -> Graph:
    artifact = load_any(path)
    if not isinstance(artifact, Graph):
        raise ValueError(f"{path} holds a {type(artifact).__name__}, expected a graph")
    return artifact
