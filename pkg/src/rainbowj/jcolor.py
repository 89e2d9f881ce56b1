"""J-colourings: verification, exact search, closed-form family rules and
explicit constructions.

A J-colouring of ``G`` is a proper colouring using all of its ``k``
colours in which every closed neighbourhood ``N[v]`` is rainbow.  The
J*-variant only asks this of internal vertices, taken here to mean
vertices of degree at least 2.  ``J(G)`` / ``J*(G)`` is the largest
``k`` for which such a colouring exists.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _backend
from .budget import BudgetExceeded, deadline
from .coloring import Colouring, ColouringError, chromatic_number, is_proper, rainbow_vertices
from .generators import cycle, jahangir, wheel
from .graph import Graph, GraphError, degrees


@dataclass(frozen=True)
class JDecision:
    """Verdict on J-colourability.

    ``rule`` names what produced the verdict: ``"oracle"`` for exact
    search, otherwise the closed-form family rule.
    """

    admits: bool
    j_number: int | None
    witness: Colouring | None
    rule: str

    def __post_init__(self) -> None:
        if self.admits != (self.j_number is not None):
            raise ValueError("j_number must be present exactly when admits is true")
        if self.witness is not None and not self.admits:
            raise ValueError("a non-admitting decision cannot carry a witness")


# -- verification ---------------------------------------------------------


def internal_vertices(g: Graph) -> list[int]:
    return [v for v, d in enumerate(degrees(g)) if d >= 2]


def _j_condition(g: Graph, col: Colouring, required) -> bool:
    if not is_proper(g, col):
        return False
    if col.colours_used != col.k:
        return False
    return set(required) <= rainbow_vertices(g, col)


def is_j_colouring(g: Graph, col: Colouring) -> bool:
    return _j_condition(g, col, range(g.num_vertices))


def is_jstar_colouring(g: Graph, col: Colouring) -> bool:
    return _j_condition(g, col, internal_vertices(g))


def j_failures(g: Graph, col: Colouring, internal_only: bool = False) -> list[str]:
    """Human-readable reasons ``col`` is not a J (or J*) colouring."""
    if len(col) != g.num_vertices:
        raise ColouringError("colouring length does not match the graph")
    out = []
    a = col.assignment
    for u, v in sorted(g.edges):
        if a[u] == a[v]:
            out.append(f"edge ({u}, {v}) is monochromatic (colour {a[u]})")
    if col.colours_used != col.k:
        out.append(f"uses {col.colours_used} colours, claim is k={col.k}")
    required = internal_vertices(g) if internal_only else range(g.num_vertices)
    rv = rainbow_vertices(g, col)
    for v in required:
        if v not in rv:
            seen = {a[v], *(a[u] for u in g.adjacency[v])}
            lost = sorted(set(range(1, col.k + 1)) - seen)
            out.append(f"vertex {v}: N[{v}] misses colour(s) {lost}")
    return out


# -- exact search ---------------------------------------------------------


def search_order(g: Graph) -> list[int]:
    """Ascending degree, ties by index: low-degree vertices constrain most."""
    deg = degrees(g)
    return sorted(range(g.num_vertices), key=lambda v: (deg[v], v))


def _relabel_by_first_use(colours) -> tuple[int, ...]:
    rename: dict[int, int] = {}
    for c in colours:
        if c not in rename:
            rename[c] = len(rename) + 1
    return tuple(rename[c] for c in colours)


def exists_k_j_colouring(
    g: Graph,
    k: int,
    internal_only: bool = False,
    budget_ms: float | None = None,
    node_limit: int = 0,
    canonical: bool = False,
) -> Colouring | None:
    """Exact search for a J-colouring (or J*-colouring) with exactly ``k`` colours.

    Returns a witness or ``None`` when none exists.  Raises
    :class:`BudgetExceeded` if the search gives up first.

    With ``canonical=True`` vertices are branched in index order, which
    makes the witness the lexicographically smallest one; otherwise the
    witness colours are renamed in order of first use.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.num_vertices
    if internal_only:
        required = set(internal_vertices(g))
        relevant = [1 if v in required else 0 for v in range(n)]
    else:
        relevant = [1] * n
    order = list(range(n)) if canonical else search_order(g)
    offsets, nbrs = _backend.csr(g.adjacency)
    status, colours = _backend.kernels.j_search(
        n, offsets, nbrs, order, k, relevant, True, deadline(budget_ms), node_limit
    )
    if status == _backend.BUDGET:
        raise BudgetExceeded(f"J-colouring search with k={k} exceeded its budget")
    if status == _backend.NONE:
        return None
    if not canonical:
        colours = _relabel_by_first_use(colours)
    return Colouring(k, tuple(colours))


def _upper_bound(g: Graph, internal_only: bool) -> int:
    deg = degrees(g)
    if internal_only:
        inner = [d for d in deg if d >= 2]
        # with no internal vertex only properness and colour use constrain k
        return min(inner) + 1 if inner else g.num_vertices
    return min(deg) + 1


def _search_task(args):
    g, k, internal_only, budget_ms, canonical = args
    try:
        return k, exists_k_j_colouring(g, k, internal_only, budget_ms, canonical=canonical), None
    except BudgetExceeded as exc:
        return k, None, str(exc)


def _scan(
    g: Graph, internal_only: bool, budget_ms: float | None, threads: int, canonical: bool
) -> JDecision:
    if g.num_vertices == 0:
        raise GraphError("J-number of the empty graph is undefined")
    end = deadline(budget_ms)
    chi = chromatic_number(g, budget_ms=budget_ms)
    hi = _upper_bound(g, internal_only)
    ks = list(range(hi, chi - 1, -1))
    if threads > 1 and len(ks) > 1:
        left = max((end - time.monotonic()) * 1000.0, 0.0)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = sorted(
                pool.map(_search_task, [(g, k, internal_only, left, canonical) for k in ks]),
                reverse=True,
                key=lambda r: r[0],
            )
        for k, witness, err in results:
            if err is not None:
                raise BudgetExceeded(err)
            if witness is not None:
                return JDecision(True, k, witness, "oracle")
        return JDecision(False, None, None, "oracle")
    for k in ks:
        left = (end - time.monotonic()) * 1000.0
        if left <= 0:
            raise BudgetExceeded("J-number scan exceeded its budget")
        witness = exists_k_j_colouring(g, k, internal_only, left, canonical=canonical)
        if witness is not None:
            return JDecision(True, k, witness, "oracle")
    return JDecision(False, None, None, "oracle")


def j_number(
    g: Graph, budget_ms: float | None = None, threads: int = 1, canonical: bool = False
) -> JDecision:
    """Largest k admitting a J-colouring, found by scanning down from ``delta + 1``.

    Values below the chromatic number are never tried.
    """
    return _scan(g, False, budget_ms, threads, canonical)


def jstar_number(
    g: Graph, budget_ms: float | None = None, threads: int = 1, canonical: bool = False
) -> JDecision:
    return _scan(g, True, budget_ms, threads, canonical)


# -- closed forms ---------------------------------------------------------


def in_j_set(n: int) -> bool:
    """Membership in {1, 4, 7, 10, ...}."""
    if n < 1:
        raise ValueError("J-set membership is defined for n >= 1")
    return n % 3 == 1


def _cycle_admits(c: int) -> bool:
    return c % 2 == 0 or c % 3 == 0


def decide_cycle(c: int) -> JDecision:
    if c < 3:
        raise GraphError("cycle needs c >= 3")
    if not _cycle_admits(c):
        return JDecision(False, None, None, "cycle-rule")
    return JDecision(True, 3 if c % 3 == 0 else 2, construct_cycle_j(c), "cycle-rule")


def decide_wheel(c: int) -> JDecision:
    if c < 3:
        raise GraphError("wheel rim needs c >= 3")
    if not _cycle_admits(c):
        return JDecision(False, None, None, "wheel-rule")
    return JDecision(True, 4 if c % 3 == 0 else 3, construct_wheel_j(c), "wheel-rule")


def decide_jahangir(n: int, m: int) -> JDecision:
    """Closed-form verdict for ``J(n, m)``.

    ``n == 1`` is the wheel ``W_{m+1}`` and follows the wheel rule (odd
    ``m`` divisible by 3 admits, and ``m % 3 == 0`` gives 4 colours).
    For ``n >= 2`` the rule is: admits iff ``m`` is even and
    ``n % 3 == 1``, with 3 colours.
    """
    if n < 1 or m < 3:
        raise GraphError(f"Jahangir graph needs n >= 1 and m >= 3, got ({n}, {m})")
    if n == 1:
        d = decide_wheel(m)
        return JDecision(d.admits, d.j_number, d.witness, "jahangir-n1-wheel-rule")
    if m % 2 == 0 and in_j_set(n):
        return JDecision(True, 3, construct_jahangir_j(n, m), "jahangir-rule")
    return JDecision(False, None, None, "jahangir-rule")


# -- constructions --------------------------------------------------------


def construct_cycle_j(c: int) -> Colouring:
    if c < 3 or not _cycle_admits(c):
        raise ValueError(f"C_{c} has no J-colouring")
    if c % 3 == 0:
        return Colouring(3, tuple(i % 3 + 1 for i in range(c)))
    return Colouring(2, tuple(i % 2 + 1 for i in range(c)))


def construct_wheel_j(c: int) -> Colouring:
    """Rim coloured as the cycle, hub given one fresh colour."""
    if c < 3 or not _cycle_admits(c):
        raise ValueError(f"W_{c + 1} has no J-colouring")
    rim = construct_cycle_j(c)
    return Colouring(rim.k + 1, rim.assignment + (rim.k + 1,))


def construct_jahangir_j(n: int, m: int) -> Colouring:
    """Three-colour J-colouring of ``J(n, m)`` for ``n = 3t + 1``, ``m`` even.

    Spokes alternate 1, 2 around the cycle.  The ``n - 1`` vertices after
    a colour-1 spoke repeat ``2, 3, 1``; after a colour-2 spoke they repeat
    ``1, 3, 2``.  The hub takes colour 3.
    """
    if n == 1:
        return construct_wheel_j(m)
    if n < 1 or m < 3 or m % 2 or not in_j_set(n):
        raise ValueError(f"J({n}, {m}) is outside the constructible family")
    t = (n - 1) // 3
    seq: list[int] = []
    for j in range(m):
        if j % 2 == 0:
            seq.append(1)
            seq.extend((2, 3, 1) * t)
        else:
            seq.append(2)
            seq.extend((1, 3, 2) * t)
    seq.append(3)
    return Colouring(3, tuple(seq))


def family_graph(family: str, n: int | None = None, m: int | None = None, c: int | None = None) -> Graph:
    """Graph for a named family; ``c`` is the cycle or rim length."""
    if family == "cycle":
        return cycle(c)
    if family == "wheel":
        return wheel(c).graph
    if family == "jahangir":
        return jahangir(n, m).graph
    raise ValueError(f"no closed-form family {family!r}")
