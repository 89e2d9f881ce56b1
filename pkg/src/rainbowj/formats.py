"""JSON and DOT serialisation for graphs, colourings, certificates and labelings.

Graph:       {"num_vertices": N, "edges": [[u, v], ...]}   (u < v on write)
Colouring:   {"k": K, "colors": [c_0, ..., c_{N-1}]}        (1-based colours)
Certificate: {"graph": ..., "coloring": ..., "claim": "J" | "Jstar", "k": K}
Labeling:    {"labels": [0, 1, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .coloring import Colouring, ColouringError
from .cordial import BinaryLabeling
from .graph import Graph, GraphError, new_graph


class FormatError(ValueError):
    """Malformed input document."""


CLAIMS = ("J", "Jstar")

# fillcolor palette for DOT; colour index i uses PALETTE[(i - 1) % 6]
PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33")


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {"num_vertices": g.num_vertices, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_dict(d: Any) -> Graph:
    try:
        n = d["num_vertices"]
        edges = d["edges"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise FormatError("num_vertices must be an integer")
        pairs = []
        for e in edges:
            if len(e) != 2 or not all(isinstance(x, int) for x in e):
                raise FormatError(f"edge {e!r} is not a pair of integers")
            pairs.append((e[0], e[1]))
        return new_graph(n, pairs)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph document: {exc}") from exc
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def colouring_to_dict(col: Colouring) -> dict[str, Any]:
    return {"k": col.k, "colors": list(col.assignment)}


def colouring_from_dict(d: Any) -> Colouring:
    try:
        return Colouring(int(d["k"]), tuple(int(c) for c in d["colors"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad colouring document: {exc}") from exc


def certificate_to_dict(g: Graph, col: Colouring, claim: str = "J") -> dict[str, Any]:
    if claim not in CLAIMS:
        raise ValueError(f"claim must be one of {CLAIMS}")
    return {
        "graph": graph_to_dict(g),
        "coloring": colouring_to_dict(col),
        "claim": claim,
        "k": col.k,
    }


def certificate_from_dict(d: Any) -> tuple[Graph, Colouring, str, int]:
    if not isinstance(d, dict):
        raise FormatError("certificate must be a JSON object")
    for key in ("graph", "coloring", "claim", "k"):
        if key not in d:
            raise FormatError(f"certificate is missing {key!r}")
    claim = d["claim"]
    if claim not in CLAIMS:
        raise FormatError(f"unknown claim {claim!r}")
    g = graph_from_dict(d["graph"])
    try:
        col = colouring_from_dict(d["coloring"])
    except ColouringError as exc:
        raise FormatError(str(exc)) from exc
    k = d["k"]
    if not isinstance(k, int):
        raise FormatError("k must be an integer")
    if len(col) != g.num_vertices:
        raise FormatError("colouring length does not match num_vertices")
    return g, col, claim, k


def labeling_to_dict(f: BinaryLabeling) -> dict[str, Any]:
    return {"labels": list(f.labels)}


def labeling_from_dict(d: Any) -> BinaryLabeling:
    try:
        return BinaryLabeling(tuple(d["labels"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad labeling document: {exc}") from exc


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=None, separators=(",", ":")) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def to_dot(g: Graph, col: Colouring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for v in range(g.num_vertices):
        if col is None:
            lines.append(f'  {v} [label="{v}", fillcolor="white"];')
        else:
            c = col[v]
            lines.append(
                f'  {v} [label="{v}:{c}", colour_index={c}, '
                f'fillcolor="{PALETTE[(c - 1) % len(PALETTE)]}"];'
            )
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
