# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, calloc, free

import time

FOUND = 1
NONE = 0
BUDGET = -1

DEF CLOCK_EVERY = 16384


cdef int* _as_c(object seq, Py_ssize_t size) except NULL:
    cdef int* out = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        out[i] = seq[i]
    return out


cdef inline void _undo(int* cl_off, int* cl, int v, int c, int kk,
                       int* cnt, int* missing, int* freec) nogil:
    cdef int j, u, i
    for j in range(cl_off[v], cl_off[v + 1]):
        u = cl[j]
        i = u * kk + c
        cnt[i] -= 1
        if cnt[i] == 0:
            missing[u] += 1
        freec[u] += 1


def j_search(int n, offsets, nbrs, order, int k, relevant, bint require_all,
             double deadline, long long node_limit):
    if n == 0:
        return (FOUND if (k == 0 or not require_all) else NONE), []
    cdef int kk = k + 1
    cdef int m2 = offsets[n]
    cdef int* off = _as_c(offsets, n + 1)
    cdef int* nb = _as_c(nbrs, m2)
    cdef int* ordr = _as_c(order, n)
    cdef int* rel = _as_c(relevant, n)
    # closed neighbourhoods in CSR: v first, then its neighbours
    cdef int* cl_off = <int*> malloc((n + 1) * sizeof(int))
    cdef int* cl = <int*> malloc((m2 + n + 1) * sizeof(int))
    cdef int* colour = <int*> calloc(n, sizeof(int))
    cdef int* cnt = <int*> calloc(n * kk, sizeof(int))
    cdef int* missing = <int*> malloc(n * sizeof(int))
    cdef int* freec = <int*> malloc(n * sizeof(int))
    cdef int* used = <int*> calloc(kk, sizeof(int))
    cdef int* tried = <int*> calloc(n + 1, sizeof(int))
    cdef int* ceiling = <int*> calloc(n + 1, sizeof(int))
    cdef int v, w, u, c, top, i, j, pos, depth, status
    cdef int missing_global = k if require_all else 0
    cdef int remaining = n
    cdef bint ok, placed
    cdef long long nodes = 0
    try:
        pos = 0
        for v in range(n):
            cl_off[v] = pos
            cl[pos] = v
            pos += 1
            for j in range(off[v], off[v + 1]):
                cl[pos] = nb[j]
                pos += 1
            missing[v] = k
            freec[v] = off[v + 1] - off[v] + 1
            if rel[v] and freec[v] < k:
                return NONE, []
        cl_off[n] = pos
        if require_all and n < k:
            return NONE, []

        depth = 0
        status = NONE
        while True:
            v = ordr[depth]
            c = tried[depth] + 1
            top = ceiling[depth] + 1
            if top > k:
                top = k
            placed = False
            while c <= top:
                nodes += 1
                if nodes % CLOCK_EVERY == 0:
                    if (node_limit and nodes > node_limit) or time.monotonic() > deadline:
                        return BUDGET, []
                if cnt[v * kk + c]:
                    c += 1
                    continue
                ok = True
                for j in range(cl_off[v], cl_off[v + 1]):
                    u = cl[j]
                    i = u * kk + c
                    if cnt[i] == 0:
                        missing[u] -= 1
                    cnt[i] += 1
                    freec[u] -= 1
                    if rel[u] and missing[u] > freec[u]:
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
                _undo(cl_off, cl, v, c, kk, cnt, missing, freec)
                used[c] -= 1
                if used[c] == 0 and require_all:
                    missing_global += 1
                remaining += 1
                c += 1
            if placed:
                depth += 1
                if depth == n:
                    return FOUND, [colour[i] for i in range(n)]
                tried[depth] = 0
                ceiling[depth] = ceiling[depth - 1]
                if colour[v] > ceiling[depth]:
                    ceiling[depth] = colour[v]
                continue
            tried[depth] = 0
            if depth == 0:
                return NONE, []
            depth -= 1
            w = ordr[depth]
            c = colour[w]
            colour[w] = 0
            _undo(cl_off, cl, w, c, kk, cnt, missing, freec)
            used[c] -= 1
            if used[c] == 0 and require_all:
                missing_global += 1
            remaining += 1
    finally:
        free(off); free(nb); free(ordr); free(rel); free(cl_off); free(cl)
        free(colour); free(cnt); free(missing); free(freec); free(used)
        free(tried); free(ceiling)


def cordial_search(int n, offsets, nbrs, int num_edges, double deadline,
                   long long node_limit):
    if n == 0:
        return FOUND, []
    cdef int vcap = (n + 1) // 2
    cdef int ecap = (num_edges + 1) // 2
    cdef int* off = _as_c(offsets, n + 1)
    cdef int* nb = _as_c(nbrs, offsets[n])
    cdef int* label = <int*> malloc(n * sizeof(int))
    cdef int* tried = <int*> malloc(n * sizeof(int))
    cdef int* delta0 = <int*> calloc(n, sizeof(int))
    cdef int* delta1 = <int*> calloc(n, sizeof(int))
    cdef int vcount[2]
    cdef int ecount[2]
    cdef int v, w, j, lab, d0, d1, nback, top
    cdef bint placed
    cdef long long nodes = 0
    vcount[0] = vcount[1] = 0
    ecount[0] = ecount[1] = 0
    try:
        for v in range(n):
            label[v] = -1
            tried[v] = -1
        v = 0
        while True:
            lab = tried[v] + 1
            top = 0 if v == 0 else 1
            placed = False
            while lab <= top:
                nodes += 1
                if nodes % CLOCK_EVERY == 0:
                    if (node_limit and nodes > node_limit) or time.monotonic() > deadline:
                        return BUDGET, []
                d1 = 0
                nback = 0
                for j in range(off[v], off[v + 1]):
                    w = nb[j]
                    if w < v:
                        nback += 1
                        if label[w] != lab:
                            d1 += 1
                d0 = nback - d1
                if (vcount[lab] + 1 <= vcap and ecount[0] + d0 <= ecap
                        and ecount[1] + d1 <= ecap):
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
                    return FOUND, [label[j] for j in range(n)]
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
    finally:
        free(off); free(nb); free(label); free(tried); free(delta0); free(delta1)
