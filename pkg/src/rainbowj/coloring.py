"""Vertex colourings, rainbow neighbourhoods, chromatic number and r_chi.

Colours are 1-based.  ``Colouring.assignment[v]`` is the colour index of
vertex ``v``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from . import _backend
from .budget import BudgetExceeded, deadline
from .graph import Graph, GraphError, degrees


class ColouringError(ValueError):
    pass


@dataclass(frozen=True)
class Colouring:
    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ColouringError("k must be non-negative")
        object.__setattr__(self, "assignment", tuple(int(c) for c in self.assignment))
        for v, c in enumerate(self.assignment):
            if not (1 <= c <= self.k):
                raise ColouringError(f"vertex {v} has colour {c} outside 1..{self.k}")

    @classmethod
    def of(cls, assignment: Sequence[int], k: int | None = None) -> "Colouring":
        """Build from a colour list; ``k`` defaults to the largest colour."""
        assignment = tuple(assignment)
        if k is None:
            k = max(assignment, default=0)
        return cls(k, assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    @property
    def colours_used(self) -> int:
        return len(set(self.assignment))

    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.k
        for c in self.assignment:
            sizes[c - 1] += 1
        return tuple(sizes)


@dataclass(frozen=True)
class RainbowReport:
    proper: bool
    colours_used: int
    rainbow_vertices: frozenset[int]
    all_rainbow: bool


def _check_shape(g: Graph, col: Colouring) -> None:
    if len(col) != g.num_vertices:
        raise ColouringError(
            f"colouring has {len(col)} entries for a graph on {g.num_vertices} vertices"
        )


def class_size(col: Colouring, i: int) -> int:
    """Number of vertices carrying colour ``i``."""
    if not (1 <= i <= col.k):
        raise ColouringError(f"colour index {i} outside 1..{col.k}")
    return col.assignment.count(i)


def is_proper(g: Graph, col: Colouring) -> bool:
    _check_shape(g, col)
    a = col.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def _sees_all(g: Graph, a: Sequence[int], v: int, k: int) -> bool:
    seen = {a[v]}
    seen.update(a[u] for u in g.adjacency[v])
    return len(seen) == k and all(1 <= c <= k for c in seen)


def yields_rainbow(g: Graph, col: Colouring, v: int) -> bool:
    """True iff ``N[v]`` contains every colour ``1..k``."""
    _check_shape(g, col)
    g.neighbors(v)  # range check
    return _sees_all(g, col.assignment, v, col.k)


def rainbow_vertices(g: Graph, col: Colouring) -> frozenset[int]:
    _check_shape(g, col)
    return frozenset(v for v in range(g.num_vertices) if _sees_all(g, col.assignment, v, col.k))


def rainbow_report(g: Graph, col: Colouring) -> RainbowReport:
    rv = rainbow_vertices(g, col)
    return RainbowReport(
        proper=is_proper(g, col),
        colours_used=col.colours_used,
        rainbow_vertices=rv,
        all_rainbow=len(rv) == g.num_vertices,
    )


def _descending_degree_order(g: Graph) -> list[int]:
    deg = degrees(g)
    return sorted(range(g.num_vertices), key=lambda v: (-deg[v], v))


def find_proper_colouring(
    g: Graph, k: int, budget_ms: float | None = None, node_limit: int = 0
) -> Colouring | None:
    """Some proper colouring with at most ``k`` colours, or ``None``."""
    n = g.num_vertices
    offsets, nbrs = _backend.csr(g.adjacency)
    status, colours = _backend.kernels.j_search(
        n, offsets, nbrs, _descending_degree_order(g), k, [0] * n, False,
        deadline(budget_ms), node_limit,
    )
    if status == _backend.BUDGET:
        raise BudgetExceeded(f"proper {k}-colouring search exceeded its budget")
    if status == _backend.NONE:
        return None
    return Colouring.of(colours)


def chromatic_number(g: Graph, budget_ms: float | None = None) -> int:
    """Exact chromatic number by trying k = 1, 2, ...."""
    if g.num_vertices == 0:
        raise GraphError("chromatic number of the empty graph is undefined")
    end = deadline(budget_ms)
    for k in range(1, g.num_vertices + 1):
        left = (end - time.monotonic()) * 1000.0
        if left <= 0:
            raise BudgetExceeded("chromatic number search exceeded its budget")
        if find_proper_colouring(g, k, budget_ms=left) is not None:
            return k
    raise AssertionError("unreachable: n colours always suffice")


# -- chi-minus colourings -------------------------------------------------

DEFAULT_PARTITION_LIMIT = 2_000_000


def colour_partitions(
    g: Graph, k: int, limit: int = DEFAULT_PARTITION_LIMIT, budget_ms: float | None = None
) -> Iterator[tuple[int, ...]]:
    """Every proper colouring with exactly ``k`` colours, one per renaming class.

    Yields assignments in which colours first appear in increasing order
    along the vertex indices.
    """
    n = g.num_vertices
    adj = g.adjacency
    a = [0] * n
    end = deadline(budget_ms)
    count = 0

    def rec(v: int, top: int) -> Iterator[tuple[int, ...]]:
        nonlocal count
        if k - top > n - v:
            return
        if v == n:
            count += 1
            if count > limit or (count & 0x3FF) == 0 and time.monotonic() > end:
                raise BudgetExceeded("colouring enumeration exceeded its budget")
            yield tuple(a)
            return
        taken = {a[u] for u in adj[v] if u < v}
        for c in range(1, min(k, top + 1) + 1):
            if c in taken:
                continue
            a[v] = c
            yield from rec(v + 1, max(top, c))
        a[v] = 0

    yield from rec(0, 0)


def _sorted_sizes(assignment: Sequence[int], k: int) -> tuple[int, ...]:
    sizes = [0] * k
    for c in assignment:
        sizes[c - 1] += 1
    return tuple(sorted(sizes, reverse=True))


def _chi_minus_partitions(g: Graph, budget_ms: float | None, limit: int):
    chi = chromatic_number(g, budget_ms=budget_ms)
    best: tuple[int, ...] | None = None
    kept: list[tuple[int, ...]] = []
    for part in colour_partitions(g, chi, limit=limit, budget_ms=budget_ms):
        sizes = _sorted_sizes(part, chi)
        if best is None or sizes > best:
            best, kept = sizes, [part]
        elif sizes == best:
            kept.append(part)
    return chi, best, kept


def chi_minus_colourings(
    g: Graph, budget_ms: float | None = None, limit: int = DEFAULT_PARTITION_LIMIT
) -> list[Colouring]:
    """All chi-colourings whose class-size vector is lexicographically largest.

    The vector ``(|class 1|, ..., |class chi|)`` is maximised over every
    proper chi-colouring, so colour 1 is a largest class, colour 2 the
    largest class left, and so on.  Classes of equal size may swap labels;
    every such labeling is returned, sorted.
    """
    chi, best, parts = _chi_minus_partitions(g, budget_ms, limit)
    out: set[tuple[int, ...]] = set()
    for part in parts:
        sizes = [0] * chi
        for c in part:
            sizes[c - 1] += 1
        # every bijection old->new that lists classes in non-increasing size
        for perm in permutations(range(1, chi + 1)):
            if tuple(sizes[perm.index(i + 1)] for i in range(chi)) == best:
                out.add(tuple(perm[c - 1] for c in part))
    return [Colouring(chi, a) for a in sorted(out)]


def r_chi(
    g: Graph, budget_ms: float | None = None, limit: int = DEFAULT_PARTITION_LIMIT
) -> tuple[int, int]:
    """(min, max) number of rainbow vertices over all chi-minus colourings."""
    counts = r_chi_counts(g, budget_ms=budget_ms, limit=limit)
    return min(counts), max(counts)


def r_chi_counts(
    g: Graph, budget_ms: float | None = None, limit: int = DEFAULT_PARTITION_LIMIT
) -> list[int]:
    """Rainbow-vertex count for each chi-minus colouring (renaming classes)."""
    chi, _, parts = _chi_minus_partitions(g, budget_ms, limit)
    return [
        sum(1 for v in range(g.num_vertices) if _sees_all(g, p, v, chi)) for p in parts
    ]
