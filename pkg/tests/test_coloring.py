import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import FIGURE_J46, naive_chi_minus, naive_chi_minus_sizes, naive_chromatic, naive_r_chi, small_catalog

from rainbowj.coloring import (
    Colouring,
    ColouringError,
    chi_minus_colourings,
    chromatic_number,
    class_size,
    colour_partitions,
    is_proper,
    r_chi,
    rainbow_report,
    yields_rainbow,
)
from rainbowj.budget import BudgetExceeded
from rainbowj.generators import complete, cycle, jahangir, path, wheel
from rainbowj.graph import Graph, GraphError, complement, max_degree, new_graph

C4 = cycle(4)
C5 = cycle(5)
K1 = path(1)
CATALOG = small_catalog()


def test_colouring_validates_range():
    with pytest.raises(ColouringError):
        Colouring(2, (1, 3))
    assert Colouring.of([1, 2, 1]).k == 2


def test_class_size():
    assert class_size(Colouring.of([1, 2, 1, 2]), 1) == 2
    assert class_size(Colouring.of(FIGURE_J46), 3) == 7
    assert class_size(Colouring.of([1]), 1) == 1
    with pytest.raises(ColouringError):
        class_size(Colouring.of([1, 2]), 3)


def test_is_proper():
    assert is_proper(C4, Colouring.of([1, 2, 1, 2]))
    assert not is_proper(cycle(3), Colouring.of([1, 2, 1]))
    assert is_proper(jahangir(4, 6).graph, Colouring.of(FIGURE_J46))
    with pytest.raises(ColouringError):
        is_proper(C4, Colouring.of([1, 2, 1]))


def test_yields_rainbow():
    assert yields_rainbow(C4, Colouring.of([1, 2, 1, 2]), 0)
    assert not yields_rainbow(path(3), Colouring.of([1, 2, 3]), 0)
    assert not yields_rainbow(C5, Colouring.of([1, 2, 1, 2, 3]), 1)
    with pytest.raises(GraphError):
        yields_rainbow(C4, Colouring.of([1, 2, 1, 2]), 7)


def test_rainbow_report():
    r = rainbow_report(C5, Colouring.of([1, 2, 1, 2, 3]))
    assert r.proper and r.colours_used == 3
    assert r.rainbow_vertices == {0, 3, 4}
    assert not r.all_rainbow
    assert rainbow_report(cycle(6), Colouring.of([1, 2, 3, 1, 2, 3])).all_rainbow
    assert rainbow_report(K1, Colouring.of([1])).all_rainbow


def test_chromatic_number_examples():
    assert chromatic_number(C5) == 3
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(K1) == 1
    assert chromatic_number(new_graph(3)) == 1


def test_chromatic_number_jahangir_4_6_is_two():
    # bipartite: every spoke sits at an even cycle position
    g = jahangir(4, 6).graph
    assert chromatic_number(g) == 2
    assert is_proper(g, Colouring.of([i % 2 + 1 for i in range(24)] + [2]))


def test_chromatic_number_odd_n_jahangir():
    assert chromatic_number(jahangir(3, 4).graph) == 3
    assert chromatic_number(wheel(5).graph) == 4


def test_chromatic_number_empty():
    with pytest.raises(GraphError):
        chromatic_number(Graph(0))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_chromatic_number_vs_bruteforce(name):
    g = CATALOG[name]
    chi = chromatic_number(g)
    assert chi == naive_chromatic(g)
    assert chi <= max_degree(g) + 1


def test_chi_minus_c4():
    cols = chi_minus_colourings(C4)
    assert [c.assignment for c in cols] == [(1, 2, 1, 2), (2, 1, 2, 1)]
    assert all(c.class_sizes() == (2, 2) for c in cols)


def test_chi_minus_c5():
    cols = chi_minus_colourings(C5)
    assert cols and all(c.class_sizes() == (2, 2, 1) for c in cols)
    # bruteforce: colour-3 vertex anywhere (5), two ways to alternate the rest
    assert len(cols) == 10


def test_chi_minus_k3():
    cols = chi_minus_colourings(complete(3))
    assert len(cols) == 6
    assert all(c.class_sizes() == (1, 1, 1) for c in cols)


@pytest.mark.parametrize("name", [n for n in sorted(CATALOG) if CATALOG[n].num_vertices <= 8])
def test_chi_minus_vs_bruteforce(name):
    g = CATALOG[name]
    cols = chi_minus_colourings(g)
    assert [c.assignment for c in cols] == naive_chi_minus(g)
    best = naive_chi_minus_sizes(g)
    for c in cols:
        assert is_proper(g, c)
        assert c.colours_used == c.k == chromatic_number(g)
        assert c.class_sizes() == best


def test_r_chi_examples():
    assert r_chi(C4) == (4, 4)
    assert r_chi(C5) == (3, 3)
    assert r_chi(complete(3)) == (3, 3)


@pytest.mark.parametrize("name", ["P4", "C6", "C7", "W5", "W6", "K4", "co-C6", "co-P5"])
def test_r_chi_vs_bruteforce(name):
    g = CATALOG[name]
    lo, hi = r_chi(g)
    assert (lo, hi) == naive_r_chi(g)
    assert 0 <= lo <= hi <= g.num_vertices


def test_r_chi_twelve_vertices():
    assert r_chi(cycle(12)) == (12, 12)
    # classes: four C9-edges and one singleton; only the singleton's two
    # C9-neighbours miss it
    assert r_chi(complement(cycle(9))) == (7, 7)


def test_partition_budget():
    with pytest.raises(BudgetExceeded):
        list(colour_partitions(cycle(12), 3, limit=10))


def test_partitions_are_renaming_classes():
    parts = list(colour_partitions(C5, 3))
    # 30 proper 3-colourings of C5, 3! renamings each
    assert len(parts) == 5


@st.composite
def coloured_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    k = draw(st.integers(1, 4))
    a = draw(st.lists(st.integers(1, k), min_size=n, max_size=n))
    return new_graph(n, edges), Colouring(k, tuple(a))


@given(coloured_graphs())
def test_class_sizes_sum(gc):
    g, col = gc
    assert sum(class_size(col, i) for i in range(1, col.k + 1)) == g.num_vertices


@settings(max_examples=200)
@given(coloured_graphs(), st.data())
def test_properness_is_edge_local(gc, data):
    g, col = gc
    v = data.draw(st.integers(0, g.num_vertices - 1))
    c = data.draw(st.integers(1, col.k))
    a = list(col.assignment)
    a[v] = c
    flipped = Colouring(col.k, tuple(a))
    elsewhere_ok = all(col[x] != col[y] for x, y in g.edges if v not in (x, y))
    around_v = all(a[x] != a[y] for x, y in g.edges if v in (x, y))
    assert is_proper(g, flipped) == (elsewhere_ok and around_v)


@given(coloured_graphs())
def test_report_consistency(gc):
    g, col = gc
    r = rainbow_report(g, col)
    assert r.all_rainbow == (r.rainbow_vertices == set(range(g.num_vertices)))
    assert r.proper == is_proper(g, col)
