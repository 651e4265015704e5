"""Reading and writing graphs: line-based text, JSON and DOT.

Text format::

    # comment
    vertices u v
    edge u u 2
    edge u v

``edge`` lines may omit the multiplicity (default 1); repeated lines add up.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import Graph


def parse_graph_text(text: str) -> Graph:
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "vertices":
            if vertices is not None:
                raise ParseError(f"line {lineno}: second 'vertices' line")
            if len(parts) < 2:
                raise ParseError(f"line {lineno}: no vertices given")
            vertices = parts[1:]
        elif kw == "edge":
            if vertices is None:
                raise ParseError(f"line {lineno}: 'edge' before 'vertices'")
            if len(parts) not in (3, 4):
                raise ParseError(f"line {lineno}: expected 'edge <src> <dst> [mult]'")
            mult = 1
            if len(parts) == 4:
                try:
                    mult = int(parts[3])
                except ValueError:
                    raise ParseError(f"line {lineno}: bad multiplicity {parts[3]!r}") from None
                if mult <= 0:
                    raise ParseError(f"line {lineno}: multiplicity must be positive")
            edges.append((parts[1], parts[2], mult))
        else:
            raise ParseError(f"line {lineno}: unknown keyword {kw!r}")
    if vertices is None:
        raise ParseError("missing 'vertices' line")
    return Graph.from_edges(vertices, edges)


def parse_graph_json(text: str | dict) -> Graph:
    try:
        data = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError("graph JSON needs a 'vertices' array")
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise ParseError("'vertices' must be an array of strings")
    edges = []
    for e in data.get("edges", []):
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise ParseError(f"bad edge entry {e!r}")
        edges.append(tuple(e))
    return Graph.from_edges(verts, edges)


def parse_graph(text: str) -> Graph:
    """Dispatch on content: JSON objects start with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def load_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def format_graph_text(g: Graph) -> str:
    lines = ["vertices " + " ".join(g.vertices)]
    for i, row in enumerate(g.adjacency):
        for j, m in enumerate(row):
            if m == 1:
                lines.append(f"edge {g.vertices[i]} {g.vertices[j]}")
            elif m > 1:
                lines.append(f"edge {g.vertices[i]} {g.vertices[j]} {m}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> dict:
    edges = [
        [g.vertices[i], g.vertices[j], m]
        for i, row in enumerate(g.adjacency)
        for j, m in enumerate(row)
        if m
    ]
    return {"vertices": list(g.vertices), "edges": edges}


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "E") -> str:
    lines = [f"digraph {_dot_id(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_dot_id(v)} [label={_dot_id(v)}];")
    for i, row in enumerate(g.adjacency):
        for j, m in enumerate(row):
            if m:
                lines.append(
                    f"  {_dot_id(g.vertices[i])} -> {_dot_id(g.vertices[j])} [label=\"{m}\"];"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
