"""Pure-Python search kernels.

Mirrors ``_kernels.pyx`` call for call; used whenever the compiled
extension is unavailable or ``RAINBOWJ_PURE=1`` is set.

Graphs arrive in CSR form: the open neighbourhood of ``v`` is
``nbrs[offsets[v]:offsets[v + 1]]``.
"""

import time

FOUND = 1
NONE = 0
BUDGET = -1

_CLOCK_EVERY = 1 << 14


def j_search(n, offsets, nbrs, order, k, relevant, require_all, deadline, node_limit):
    """Depth-first search for a proper ``k``-colouring with rainbow constraints.

    Every vertex flagged in ``relevant`` must see all ``k`` colours in its
    closed neighbourhood.  With ``require_all`` every colour must also be
    used somewhere.  Colours are tried in increasing order and a vertex may
    open at most one new colour, so each colouring is visited once up to
    renaming.

    Returns ``(status, colours)`` with 1-based colours when ``status`` is
    ``FOUND``.
    """
    if n == 0:
        return (FOUND if (k == 0 or not require_all) else NONE), []
    kk = k + 1
    colour = [0] * n
    cnt = [0] * (n * kk)
    missing = [k] * n
    free = [offsets[v + 1] - offsets[v] + 1 for v in range(n)]
    used = [0] * kk
    missing_global = k if require_all else 0
    remaining = n
    closed = [(v,) + tuple(nbrs[offsets[v]:offsets[v + 1]]) for v in range(n)]
    rel = [bool(r) for r in relevant]

    # A relevant vertex whose N[v] is too small can never be rainbow.
    for v in range(n):
        if rel[v] and free[v] < k:
            return NONE, []
    if require_all and n < k:
        return NONE, []

    tried = [0] * (n + 1)
    ceiling = [0] * (n + 1)
    nodes = 0
    depth = 0
    while True:
        v = order[depth]
        c = tried[depth] + 1
        top = min(k, ceiling[depth] + 1)
        placed = False
        while c <= top:
            nodes += 1
            if nodes % _CLOCK_EVERY == 0:
                if (node_limit and nodes > node_limit) or time.monotonic() > deadline:
                    return BUDGET, []
            if cnt[v * kk + c]:
                c += 1
                continue
            ok = True
            for u in closed[v]:
                i = u * kk + c
                if cnt[i] == 0:
                    missing[u] -= 1
                cnt[i] += 1
                free[u] -= 1
                if rel[u] and missing[u] > free[u]:
                    ok = False
            if used[c] == 0 and require_all:
                missing_global -= 1
            used[c] += 1
            remaining -= 1
            if ok and missing_global > remaining:
                ok = False
            if ok:
                colour[v] = c
                tried[depth] = c
                placed = True
                break
            _undo(closed[v], c, kk, cnt, missing, free)
            used[c] -= 1
            if used[c] == 0 and require_all:
                missing_global += 1
            remaining += 1
            c += 1
        if placed:
            depth += 1
            if depth == n:
                return FOUND, colour
            tried[depth] = 0
            ceiling[depth] = max(ceiling[depth - 1], colour[v])
            continue
        # exhausted this vertex: step back
        tried[depth] = 0
        if depth == 0:
            return NONE, []
        depth -= 1
        w = order[depth]
        c = colour[w]
        colour[w] = 0
        _undo(closed[w], c, kk, cnt, missing, free)
        used[c] -= 1
        if used[c] == 0 and require_all:
            missing_global += 1
        remaining += 1


def _undo(closed_v, c, kk, cnt, missing, free):
    for u in closed_v:
        i = u * kk + c
        cnt[i] -= 1
        if cnt[i] == 0:
            missing[u] += 1
        free[u] += 1


def cordial_search(n, offsets, nbrs, num_edges, deadline, node_limit):
    """Backtracking search for a cordial 0/1 labeling in vertex order.

    Vertex 0 is pinned to label 0 (flipping every label preserves
    cordiality), so the first hit is the lexicographically smallest
    cordial labeling.
    """
    if n == 0:
        return FOUND, []
    vcap = (n + 1) // 2
    ecap = (num_edges + 1) // 2
    label = [-1] * n
    tried = [-1] * n
    vcount = [0, 0]
    ecount = [0, 0]
    # edge contributions recorded per depth so they can be undone
    delta0 = [0] * n
    delta1 = [0] * n
    back = [tuple(w for w in nbrs[offsets[v]:offsets[v + 1]] if w < v) for v in range(n)]
    nodes = 0
    v = 0
    while True:
        lab = tried[v] + 1
        placed = False
        while lab <= (0 if v == 0 else 1):
            nodes += 1
            if nodes % _CLOCK_EVERY == 0:
                if (node_limit and nodes > node_limit) or time.monotonic() > deadline:
                    return BUDGET, []
            d1 = 0
            for w in back[v]:
                if label[w] != lab:
                    d1 += 1
            d0 = len(back[v]) - d1
            if (
                vcount[lab] + 1 <= vcap
                and ecount[0] + d0 <= ecap
                and ecount[1] + d1 <= ecap
            ):
                label[v] = lab
                tried[v] = lab
                vcount[lab] += 1
                ecount[0] += d0
                ecount[1] += d1
                delta0[v] = d0
                delta1[v] = d1
                placed = True
                break
            lab += 1
        if placed:
            v += 1
            if v == n:
                return FOUND, label
            tried[v] = -1
            continue
        tried[v] = -1
        if v == 0:
            return NONE, []
        v -= 1
        vcount[label[v]] -= 1
        ecount[0] -= delta0[v]
        ecount[1] -= delta1[v]
        label[v] = -1
