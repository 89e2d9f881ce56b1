"""Graph families with a fixed, reproducible vertex numbering.

Jahangir graphs (and wheels, which are ``J(1, m)``) put the cycle on
vertices ``0..nm-1`` in cyclic order and the hub last, at index ``nm``.
Spokes sit at cycle positions ``0, n, 2n, ..., (m-1)n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, new_graph


@dataclass(frozen=True)
class JahangirLayout:
    graph: Graph
    hub: int
    spokes: tuple[int, ...]
    cycle_order: tuple[int, ...]
    n: int
    m: int

    @property
    def interior(self) -> tuple[int, ...]:
        """Cycle vertices not joined to the hub."""
        spokes = set(self.spokes)
        return tuple(v for v in self.cycle_order if v not in spokes)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def jahangir(n: int, m: int) -> JahangirLayout:
    """``J(n, m)``: cycle ``C_{nm}`` plus a hub joined to every n-th cycle vertex.

    The gap from the last spoke back to the first is also ``n``.
    """
    if n < 1 or m < 3:
        raise GraphError(f"Jahangir graph needs n >= 1 and m >= 3, got ({n}, {m})")
    size = n * m
    hub = size
    spokes = tuple(i * n for i in range(m))
    edges = [(i, (i + 1) % size) for i in range(size)]
    edges += [(hub, s) for s in spokes]
    return JahangirLayout(
        graph=new_graph(size + 1, edges),
        hub=hub,
        spokes=spokes,
        cycle_order=tuple(range(size)),
        n=n,
        m=m,
    )


def wheel(c: int) -> JahangirLayout:
    """Wheel ``W_{c+1}``, i.e. a hub over the rim ``C_c``."""
    if c < 3:
        raise GraphError("wheel rim needs at least three vertices")
    return jahangir(1, c)


def mycielski(g: Graph) -> Graph:
    """Mycielskian of ``g``.

    Vertex ``i`` keeps its role from ``g``; ``n + i`` is its shadow, joined
    to the ``g``-neighbours of ``i``; ``2n`` is the apex joined to every
    shadow.
    """
    n = g.num_vertices
    if n < 1:
        raise GraphError("mycielski of the empty graph is undefined")
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges += [(2 * n, n + i) for i in range(n)]
    return new_graph(2 * n + 1, edges)
