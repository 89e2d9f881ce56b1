"""Acceptance criteria, one test each, at the pinned tolerances.

Every test records a PASS/FAIL line that is printed in the terminal
summary.  Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

import time

import pytest
from oracles import FIGURE_J46, naive_j_exists

from rainbowj.coloring import chi_minus_colourings, rainbow_vertices
from rainbowj.cordial import (
    cordial_and_j_colourable,
    cordial_family_instances,
    find_cordial_labeling,
    is_cordial_labeling,
)
from rainbowj.generators import complete, cycle, jahangir, mycielski, path, wheel
from rainbowj.graph import complement, min_degree
from rainbowj.jcolor import (
    construct_jahangir_j,
    decide_wheel,
    exists_k_j_colouring,
    is_j_colouring,
    j_number,
    jstar_number,
)

pytestmark = pytest.mark.acceptance


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def _finish(report, number, mismatches, clock, limit, what):
    in_time = clock.seconds < limit
    ok = not mismatches and in_time
    detail = f"{what}; {clock.seconds:.3f}s (limit {limit}s)"
    if mismatches:
        detail += f"; {len(mismatches)} mismatch(es): " + "; ".join(mismatches[:12])
    report(number, ok, detail)
    assert not mismatches, "\n".join(mismatches)
    assert in_time, f"took {clock.seconds:.3f}s, limit {limit}s"


def test_01_cycles(acceptance_report):
    bad = []
    with Clock() as clock:
        for c in range(3, 15):
            d = j_number(cycle(c))
            admits = c % 2 == 0 or c % 3 == 0
            value = (3 if c % 3 == 0 else 2) if admits else None
            if (d.admits, d.j_number) != (admits, value):
                bad.append(f"C_{c}: oracle {d.admits}/{d.j_number}, expected {admits}/{value}")
    _finish(acceptance_report, 1, bad, clock, 1.0, "cycles C_3..C_14")


def test_02_paths(acceptance_report):
    bad = []
    with Clock() as clock:
        for c in range(3, 13):
            j, js = j_number(path(c)), jstar_number(path(c))
            if (j.admits, j.j_number, js.admits, js.j_number) != (True, 2, True, 3):
                bad.append(f"P_{c}: J={j.j_number} J*={js.j_number}")
    _finish(acceptance_report, 2, bad, clock, 1.0, "paths P_3..P_12: J=2, J*=3")


def test_03_wheels(acceptance_report):
    bad = []
    with Clock() as clock:
        for c in range(3, 13):
            d, o = decide_wheel(c), j_number(wheel(c).graph)
            if (d.admits, d.j_number) != (o.admits, o.j_number):
                bad.append(f"W_{c + 1}: rule {d.admits}/{d.j_number}, oracle {o.admits}/{o.j_number}")
        if j_number(wheel(6).graph).j_number != 4:
            bad.append("J(W_7) != 4")
        for c in (5, 7, 11):
            if j_number(wheel(c).graph).admits:
                bad.append(f"W_{c + 1} admits")
    _finish(acceptance_report, 3, bad, clock, 5.0, "wheels c=3..12 vs closed form")


def _criterion4_instances():
    pairs = [(n, m) for n in range(2, 21) for m in range(3, 21) if n * m + 1 <= 21]
    return pairs + [(4, 6)]


def test_04_jahangir_characterisation(acceptance_report):
    bad = []
    with Clock() as clock:
        for n, m in _criterion4_instances():
            o = j_number(jahangir(n, m).graph)
            admits = m % 2 == 0 and n % 3 == 1
            want = (True, 3) if admits else (False, None)
            if (o.admits, o.j_number) != want:
                w = "" if o.witness is None else f" witness={list(o.witness.assignment)}"
                bad.append(f"J({n},{m}): oracle admits={o.admits} J={o.j_number}, expected {want}{w}")
    _finish(acceptance_report, 4, bad, clock, 120.0, f"Jahangir n>=2, nm+1<=21 plus (4,6): {len(_criterion4_instances())} graphs")


def test_05_figure_witness(acceptance_report):
    bad = []
    with Clock() as clock:
        col = construct_jahangir_j(4, 6)
        if col.k != 3 or not is_j_colouring(jahangir(4, 6).graph, col):
            bad.append("constructed colouring fails the verifier")
        if col.assignment != FIGURE_J46:
            bad.append(f"labels differ from the figure: {list(col.assignment)}")
    _finish(acceptance_report, 5, bad, clock, 0.1, "construct J(4,6) = figure labels, verified k=3")


def test_06_reconciliation(acceptance_report):
    bad = []
    with Clock() as clock:
        o = j_number(jahangir(1, 6).graph)
        if (o.admits, o.j_number) != (True, 4):
            bad.append(f"J(1,6): {o.admits}/{o.j_number}")
        o = j_number(jahangir(1, 3).graph)
        if (o.admits, o.j_number) != (True, 4):
            bad.append(f"J(1,3): {o.admits}/{o.j_number}")
    _finish(acceptance_report, 6, bad, clock, 1.0, "J(1,6)=W_7 value 4, J(1,3)=K_4 value 4")


def test_07_complements(acceptance_report):
    bad = []
    with Clock() as clock:
        o = j_number(complement(cycle(6)))
        if (o.admits, o.j_number) != (True, 3):
            bad.append(f"co-C_6: {o.admits}/{o.j_number}")
        o = j_number(complement(cycle(9)))
        if o.admits:
            bad.append(f"co-C_9 admits with {o.j_number}: {list(o.witness.assignment)}")
    _finish(acceptance_report, 7, bad, clock, 30.0, "J(co-C_6)=3, co-C_9 not J-colourable")


def _rchi_catalog():
    cat = {f"P_{n}": path(n) for n in range(3, 9)}
    cat.update({f"C_{n}": cycle(n) for n in range(3, 11)})
    cat.update({f"W_{c + 1}": wheel(c).graph for c in range(3, 8)})
    cat.update({f"K_{n}": complete(n) for n in range(2, 6)})
    cat["co-C_6"] = complement(cycle(6))
    cat["co-C_9"] = complement(cycle(9))
    return cat


def test_08_rchi_criterion(acceptance_report):
    bad = []
    with Clock() as clock:
        for name, g in _rchi_catalog().items():
            o = j_number(g)
            cols = chi_minus_colourings(g)
            full = [c for c in cols if len(rainbow_vertices(g, c)) == g.num_vertices]
            if o.admits != bool(full):
                cert = (
                    f"J-colouring {list(o.witness.assignment)} (k={o.j_number})"
                    if o.admits
                    else f"all-rainbow chi-minus colouring {list(full[0].assignment)}"
                )
                best = max(len(rainbow_vertices(g, c)) for c in cols)
                bad.append(
                    f"{name}: oracle admits={o.admits}, but best chi-minus colouring "
                    f"has {best}/{g.num_vertices} rainbow vertices "
                    f"(e.g. {list(cols[0].assignment)}, sizes {list(cols[0].class_sizes())}); {cert}"
                )
    _finish(acceptance_report, 8, bad, clock, 60.0, f"r_chi = n criterion over {len(_rchi_catalog())} catalog graphs")


def test_09_mycielski(acceptance_report):
    bases = {f"P_{n}": path(n) for n in range(2, 6)}
    bases.update({f"C_{n}": cycle(n) for n in range(3, 7)})
    bases["K_3"] = complete(3)
    bad = []
    with Clock() as clock:
        for name, g in bases.items():
            o = j_number(mycielski(g))
            if o.admits:
                bad.append(f"mu({name}) admits: {list(o.witness.assignment)}")
    _finish(acceptance_report, 9, bad, clock, 60.0, "Mycielski graphs of 9 bases never J-colourable")


def test_10_cordial_families(acceptance_report):
    bad = []
    with Clock() as clock:
        members = cordial_family_instances(26)
        required = {(1, 4), (1, 8), (3, 4), (5, 4), (3, 6)}
        missing = required - {(n, m) for n, m, _ in members}
        if missing:
            bad.append(f"family enumeration misses {sorted(missing)}")
        for n, m, fam in members:
            g = jahangir(n, m).graph
            f = find_cordial_labeling(g)
            if f is None or not is_cordial_labeling(g, f):
                bad.append(f"J({n},{m}) [{fam}]: no cordial labeling found")
        if not cordial_and_j_colourable(7, 4):
            bad.append("cordial_and_j_colourable(7,4) is false")
        if cordial_and_j_colourable(3, 6):
            bad.append("cordial_and_j_colourable(3,6) is true")
    _finish(acceptance_report, 10, bad, clock, 60.0, f"{len(members)} cordial family members with nm+1<=26")


def test_11_oracle_completeness(acceptance_report):
    small = {k: g for k, g in _rchi_catalog().items() if g.num_vertices <= 8}
    bad = []
    checks = 0
    with Clock() as clock:
        for name, g in small.items():
            for k in range(1, min_degree(g) + 2):
                checks += 1
                if (exists_k_j_colouring(g, k) is not None) != naive_j_exists(g, k):
                    bad.append(f"{name}, k={k}")
    _finish(acceptance_report, 11, bad, clock, 60.0, f"pruned oracle = naive k^n enumeration on {len(small)} graphs, {checks} (graph, k) pairs")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
