"""Finite directed multigraphs stored as adjacency matrices.

A graph is an ordered tuple of vertex names together with a square matrix
of edge multiplicities: ``adjacency[i][j]`` counts the edges from vertex
``i`` to vertex ``j``.  Everything here is immutable and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BoundExceededError,
    NotHereditaryError,
    NotSaturatedError,
    ParseError,
    SemanticError,
)

HS_ENUMERATE_BOUND = 16


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        adj = tuple(tuple(row) for row in self.adjacency)
        if not verts:
            raise ParseError("a graph needs at least one vertex")
        if any(not isinstance(v, str) or not v for v in verts):
            raise ParseError("vertex names must be nonempty strings")
        if len(set(verts)) != len(verts):
            raise ParseError("duplicate vertex name")
        h = len(verts)
        if len(adj) != h or any(len(row) != h for row in adj):
            raise ParseError(f"adjacency must be {h}x{h}")
        for row in adj:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                    raise ParseError(f"edge multiplicity must be a nonnegative integer, got {x!r}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "Graph":
        """Build a graph from a square matrix; default names are ``v1 .. vh``."""
        rows = [[int(x) for x in row] for row in matrix]
        if names is None:
            names = [f"v{i + 1}" for i in range(len(rows))]
        return cls(tuple(names), tuple(tuple(r) for r in rows))

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[tuple]) -> "Graph":
        """Edges are ``(src, dst)`` or ``(src, dst, mult)``; repeats accumulate."""
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ParseError("duplicate vertex name")
        adj = [[0] * len(vertices) for _ in vertices]
        for edge in edges:
            if len(edge) == 2:
                (src, dst), mult = edge, 1
            elif len(edge) == 3:
                src, dst, mult = edge
            else:
                raise ParseError(f"bad edge {edge!r}")
            if src not in index or dst not in index:
                raise ParseError(f"edge {src}->{dst} uses an unknown vertex")
            if isinstance(mult, bool) or not isinstance(mult, int) or mult <= 0:
                raise ParseError(f"edge multiplicity must be a positive integer, got {mult!r}")
            adj[index[src]][index[dst]] += mult
        return cls(vertices, tuple(tuple(r) for r in adj))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise SemanticError(f"unknown vertex {name!r}") from None

    def out_degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    def in_degree(self, j: int) -> int:
        return sum(row[j] for row in self.adjacency)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(self.in_degree(j) for j in range(self.order))

    def successors(self, i: int) -> list[int]:
        return [j for j, m in enumerate(self.adjacency[i]) if m]

    def edge_count(self) -> int:
        return sum(map(sum, self.adjacency))

    def sinks(self) -> list[int]:
        return [i for i in range(self.order) if not any(self.adjacency[i])]

    def has_sink(self) -> bool:
        return any(not any(row) for row in self.adjacency)

    def relabel(self, names: Sequence[str]) -> "Graph":
        return Graph(tuple(names), self.adjacency)


@dataclass(frozen=True)
class VertexClassification:
    sinks: frozenset[int]
    sources: frozenset[int]
    regular: frozenset[int]
    isolated: frozenset[int]


def classify_vertices(g: Graph) -> VertexClassification:
    h = g.order
    sinks = frozenset(i for i in range(h) if g.out_degree(i) == 0)
    sources = frozenset(j for j in range(h) if g.in_degree(j) == 0)
    regular = frozenset(range(h)) - sinks
    return VertexClassification(sinks, sources, regular, sinks & sources)


def _as_index(g: Graph, v: int | str) -> int:
    if isinstance(v, str):
        return g.index(v)
    if not 0 <= v < g.order:
        raise SemanticError(f"vertex index {v} out of range")
    return v


def reachable_from(g: Graph, v: int) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in g.successors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def reaches(g: Graph, v: int | str, w: int | str) -> bool:
    """True iff there is a path (possibly of length zero) from ``v`` to ``w``."""
    return _as_index(g, w) in reachable_from(g, _as_index(g, v))


@dataclass(frozen=True)
class Condensation:
    components: tuple[frozenset[int], ...]
    dag_edges: frozenset[tuple[int, int]]
    cyclic: tuple[bool, ...]
    simple_cycle: tuple[bool, ...]

    def component_of(self) -> dict[int, int]:
        return {v: c for c, comp in enumerate(self.components) for v in comp}


def _tarjan(g: Graph) -> list[list[int]]:
    # iterative Tarjan; recursion would hit the interpreter limit on long paths
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(g.order):
        if root in index:
            continue
        work = [(root, iter(g.successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out


def condensation(g: Graph) -> Condensation:
    """Strongly connected components, ordered by their smallest vertex."""
    comps = sorted(_tarjan(g), key=min)
    where = {v: c for c, comp in enumerate(comps) for v in comp}
    dag = set()
    cyclic = []
    simple = []
    for c, comp in enumerate(comps):
        members = set(comp)
        inner_edges = 0
        degrees = []
        for v in comp:
            d = 0
            for w, m in enumerate(g.adjacency[v]):
                if not m:
                    continue
                if w in members:
                    d += m
                else:
                    dag.add((c, where[w]))
            degrees.append(d)
            inner_edges += d
        cyclic.append(inner_edges > 0)
        simple.append(inner_edges > 0 and all(d == 1 for d in degrees))
    return Condensation(
        tuple(frozenset(c) for c in comps), frozenset(dag), tuple(cyclic), tuple(simple)
    )


def _component_ancestors(cond: Condensation) -> list[set[int]]:
    """For each component, the set of other components that reach it."""
    n = len(cond.components)
    preds: list[set[int]] = [set() for _ in range(n)]
    for a, b in cond.dag_edges:
        preds[b].add(a)
    result = []
    for c in range(n):
        seen: set[int] = set()
        stack = list(preds[c])
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(preds[x])
        result.append(seen)
    return result


def maximal_sinks_and_cycles(g: Graph) -> tuple[frozenset[int], list[int]]:
    """Sinks reached by no cycle, and simple-cycle components reached by no other cycle.

    Returns ``(sink vertex indices, component indices into condensation(g))``.
    """
    cond = condensation(g)
    anc = _component_ancestors(cond)
    where = cond.component_of()
    sinks = frozenset(
        v for v in g.sinks() if not any(cond.cyclic[a] for a in anc[where[v]])
    )
    cycles = [
        c
        for c in range(len(cond.components))
        if cond.simple_cycle[c] and not any(cond.cyclic[a] for a in anc[c])
    ]
    return sinks, cycles


def covering_window(g: Graph, lo: int, hi: int) -> Graph:
    """Levels ``lo..hi`` of the covering graph; every edge climbs one level."""
    if lo > hi:
        raise SemanticError(f"empty window [{lo}, {hi}]")
    h = g.order
    levels = range(lo, hi + 1)
    names = [f"{v}@{a}" for a in levels for v in g.vertices]
    size = h * len(levels)
    adj = [[0] * size for _ in range(size)]
    for k in range(len(levels) - 1):
        for i in range(h):
            for j in range(h):
                adj[k * h + i][(k + 1) * h + j] = g.adjacency[i][j]
    return Graph(tuple(names), tuple(tuple(r) for r in adj))


def cartesian_product(e: Graph, f: Graph) -> Graph:
    """Vertices ``(u, v)`` named ``"u,v"``; E-edges move the first coordinate, F-edges the second."""
    pairs = [(u, v) for u in range(e.order) for v in range(f.order)]
    adj = []
    for u, v in pairs:
        row = []
        for u2, v2 in pairs:
            m = 0
            if v == v2:
                m += e.adjacency[u][u2]
            if u == u2:
                m += f.adjacency[v][v2]
            row.append(m)
        adj.append(tuple(row))
    names = tuple(f"{e.vertices[u]},{f.vertices[v]}" for u, v in pairs)
    return Graph(names, tuple(adj))


def _vertex_set(g: Graph, h: Iterable[int | str]) -> frozenset[int]:
    return frozenset(_as_index(g, v) for v in h)


def hs_check(g: Graph, h: Iterable[int | str]) -> tuple[bool, bool]:
    """Return ``(hereditary, saturated)`` for the vertex set ``h``."""
    hs = _vertex_set(g, h)
    hereditary = all(
        w in hs for v in hs for w in g.successors(v)
    )
    saturated = True
    for v in range(g.order):
        if v in hs:
            continue
        succ = g.successors(v)
        if succ and all(w in hs for w in succ):
            saturated = False
            break
    return hereditary, saturated


def hs_enumerate(g: Graph, max_vertices: int = HS_ENUMERATE_BOUND) -> list[frozenset[int]]:
    """All hereditary saturated subsets, by size and then lexicographically."""
    if g.order > max_vertices:
        raise BoundExceededError(
            f"{g.order} vertices exceeds the enumeration bound {max_vertices}"
        )
    out = []
    for k in range(g.order + 1):
        for subset in combinations(range(g.order), k):
            if hs_check(g, subset) == (True, True):
                out.append(frozenset(subset))
    return out


def quotient(g: Graph, h: Iterable[int | str]) -> Graph:
    """Delete the vertices of ``h`` and every edge whose range lies in ``h``."""
    hs = _vertex_set(g, h)
    hereditary, saturated = hs_check(g, hs)
    if not hereditary:
        raise NotHereditaryError("vertex set is not hereditary")
    if not saturated:
        raise NotSaturatedError("vertex set is hereditary but not saturated")
    keep = [i for i in range(g.order) if i not in hs]
    if not keep:
        raise SemanticError("quotient by the whole vertex set is empty")
    return Graph(
        tuple(g.vertices[i] for i in keep),
        tuple(tuple(g.adjacency[i][j] for j in keep) for i in keep),
    )


def disjoint_union(*graphs: Graph) -> Graph:
    names = [v for g in graphs for v in g.vertices]
    size = len(names)
    adj = [[0] * size for _ in range(size)]
    off = 0
    for g in graphs:
        for i, row in enumerate(g.adjacency):
            adj[off + i][off : off + g.order] = row
        off += g.order
    return Graph(tuple(names), tuple(tuple(r) for r in adj))
