"""Time the compiled search kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

from rainbowj import _backend, _kernels_py
from rainbowj.generators import cycle, jahangir, mycielski, wheel
from rainbowj.graph import complement
from rainbowj.jcolor import search_order

try:
    from rainbowj import _kernels as compiled
except ImportError:
    compiled = None


def j_case(name, g, k):
    offsets, nbrs = _backend.csr(g.adjacency)
    args = (g.num_vertices, offsets, nbrs, search_order(g), k, [1] * g.num_vertices, True, 1e18, 0)
    return name, "j_search", args


def cordial_case(name, g):
    offsets, nbrs = _backend.csr(g.adjacency)
    return name, "cordial_search", (g.num_vertices, offsets, nbrs, g.num_edges, 1e18, 0)


CASES = [
    j_case("J(4,6) k=3", jahangir(4, 6).graph, 3),
    j_case("J(3,6) k=3 (none)", jahangir(3, 6).graph, 3),
    j_case("J(5,4) k=3 (none)", jahangir(5, 4).graph, 3),
    j_case("J(7,4) k=3", jahangir(7, 4).graph, 3),
    j_case("J(3,8) k=3 (none)", jahangir(3, 8).graph, 3),
    j_case("co-C9 k=5 (none)", complement(cycle(9)), 5),
    j_case("mu(C6) k=3 (none)", mycielski(cycle(6)), 3),
    cordial_case("W_25 cordial", wheel(24).graph),
    cordial_case("J(3,8) cordial", jahangir(3, 8).graph),
    cordial_case("C_22 (none)", cycle(22)),
]


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'case':<22} {'python s':>10} {'compiled s':>11} {'speedup':>8}  status")
    for name, kernel, args in CASES:
        tp, rp = best_of(getattr(_kernels_py, kernel), args, opts.repeat)
        status = {1: "found", 0: "none", -1: "budget"}[rp[0]]
        if compiled is None:
            print(f"{name:<22} {tp:>10.4f} {'-':>11} {'-':>8}  {status}")
            continue
        tc, rc = best_of(getattr(compiled, kernel), args, opts.repeat)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<22} {tp:>10.4f} {tc:>11.5f} {tp / max(tc, 1e-9):>7.0f}x  {status}")


if __name__ == "__main__":
    main()
