"""Undirected simple graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex queries."""


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Edges are stored canonically as ``(u, v)`` with ``u < v``.  Construct
    through :func:`new_graph` (or ``Graph.from_edges``) so that the
    invariants are checked.
    """

    num_vertices: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise GraphError("num_vertices must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.num_vertices):
                raise GraphError(f"edge ({u}, {v}) out of range or not canonical")

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Iterable[int]]) -> "Graph":
        canon = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not (0 <= w < num_vertices):
                    raise GraphError(f"endpoint {w} out of range [0, {num_vertices})")
            canon.add((u, v) if u < v else (v, u))
        return cls(num_vertices, frozenset(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.num_vertices):
            raise GraphError(f"vertex {v} out of range [0, {self.num_vertices})")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges})"


def new_graph(num_vertices: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
    """Validate and build a graph; duplicate edges collapse."""
    return Graph.from_edges(num_vertices, edges)


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """``N[v]`` as a sorted tuple."""
    return tuple(sorted((v, *g.neighbors(v))))


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def degrees(g: Graph) -> list[int]:
    return [len(a) for a in g.adjacency]


def min_degree(g: Graph) -> int:
    if g.num_vertices == 0:
        raise GraphError("min_degree of the empty graph is undefined")
    return min(degrees(g))


def max_degree(g: Graph) -> int:
    if g.num_vertices == 0:
        raise GraphError("max_degree of the empty graph is undefined")
    return max(degrees(g))


def complement(g: Graph) -> Graph:
    n = g.num_vertices
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in g.edges
    )
    return Graph(n, edges)


def is_connected(g: Graph) -> bool:
    if g.num_vertices == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.num_vertices


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True
