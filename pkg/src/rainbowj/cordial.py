"""Cordial labelings and the two cordial Jahangir families.

A 0/1 vertex labeling ``f`` induces the edge label ``|f(u) - f(v)|``.
The labeling is cordial when the vertex-label counts differ by at most
one and so do the edge-label counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import _backend
from .budget import BudgetExceeded, deadline
from .graph import Graph, GraphError
from .jcolor import decide_jahangir


class LabelingStats(NamedTuple):
    v0: int
    v1: int
    e0: int
    e1: int


@dataclass(frozen=True)
class BinaryLabeling:
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        bad = [x for x in self.labels if x not in (0, 1)]
        if bad:
            raise ValueError(f"labels must be 0 or 1, got {bad[0]}")

    def __len__(self) -> int:
        return len(self.labels)

    def flipped(self) -> "BinaryLabeling":
        return BinaryLabeling(tuple(1 - x for x in self.labels))


def _labels(f: BinaryLabeling | Sequence[int]) -> BinaryLabeling:
    return f if isinstance(f, BinaryLabeling) else BinaryLabeling(tuple(f))


def labeling_stats(g: Graph, f: BinaryLabeling | Sequence[int]) -> LabelingStats:
    f = _labels(f)
    if len(f) != g.num_vertices:
        raise ValueError(f"labeling has {len(f)} entries for {g.num_vertices} vertices")
    lab = f.labels
    v1 = sum(lab)
    e1 = sum(1 for u, v in g.edges if lab[u] != lab[v])
    return LabelingStats(g.num_vertices - v1, v1, g.num_edges - e1, e1)


def is_cordial_labeling(g: Graph, f: BinaryLabeling | Sequence[int]) -> bool:
    s = labeling_stats(g, f)
    return abs(s.v0 - s.v1) <= 1 and abs(s.e0 - s.e1) <= 1


def find_cordial_labeling(
    g: Graph, budget_ms: float | None = None, node_limit: int = 0
) -> BinaryLabeling | None:
    """Lexicographically smallest cordial labeling, or ``None`` if there is none.

    Raises :class:`BudgetExceeded` when the search is cut off.
    """
    offsets, nbrs = _backend.csr(g.adjacency)
    status, labels = _backend.kernels.cordial_search(
        g.num_vertices, offsets, nbrs, g.num_edges, deadline(budget_ms), node_limit
    )
    if status == _backend.BUDGET:
        raise BudgetExceeded("cordial labeling search exceeded its budget")
    if status == _backend.NONE:
        return None
    return BinaryLabeling(tuple(labels))


FAMILY_A = "A"  # J(2k-1, 4l)
FAMILY_B = "B"  # J(4k-1, 4l+2)


def cordial_family_member(n: int, m: int) -> str | None:
    """Which known cordial Jahangir family ``J(n, m)`` belongs to, if any.

    A: ``n`` odd and ``m % 4 == 0``.  B: ``n % 4 == 3`` and ``m % 4 == 2``
    with ``m >= 6``.  The two cannot overlap.
    """
    if n < 1 or m < 3:
        raise GraphError(f"Jahangir graph needs n >= 1 and m >= 3, got ({n}, {m})")
    if n % 2 == 1 and m % 4 == 0:
        return FAMILY_A
    if n % 4 == 3 and m % 4 == 2 and m >= 6:
        return FAMILY_B
    return None


def cordial_and_j_colourable(n: int, m: int) -> bool:
    return cordial_family_member(n, m) is not None and decide_jahangir(n, m).admits


def cordial_family_instances(max_vertices: int) -> list[tuple[int, int, str]]:
    """Every ``(n, m, family)`` with ``nm + 1 <= max_vertices``."""
    out = []
    for n in range(1, max_vertices):
        for m in range(3, (max_vertices - 1) // n + 1):
            fam = cordial_family_member(n, m)
            if fam is not None:
                out.append((n, m, fam))
    return out

