"""Compiled BFS kernels over CSR adjacency arrays.

Every kernel takes ``indptr`` (int64, length n + 1) and ``indices`` (int32)
and writes hop distances into caller-owned buffers, with -1 for nodes the
search did not reach.
"""

from __future__ import annotations

import numba
import numpy as np
from numba import njit, prange

# the bundled TBB is often too old and warns on every import; try it last
if numba.config.THREADING_LAYER == "default":
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]


@njit(cache=True)
def bfs_fill(indptr, indices, sources, dist, queue):
    """Multi-source BFS. Returns the number of reached nodes.

    ``queue[:count]`` holds the reached nodes in nondecreasing distance order,
    so ``dist[queue[count - 1]]`` is the largest distance found.
    """
    dist[:] = -1
    tail = 0
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du
                queue[tail] = w
                tail += 1
    return tail


@njit(cache=True)
def _single_ecc(indptr, indices, source, dist, queue):
    src = np.empty(1, np.int64)
    src[0] = source
    count = bfs_fill(indptr, indices, src, dist, queue)
    return dist[queue[count - 1]]


@njit(cache=True, parallel=True)
def eccentricities_naive(indptr, indices, nodes, n_chunks):
    """One BFS per entry of ``nodes``; chunks run in parallel."""
    n = indptr.shape[0] - 1
    m = nodes.shape[0]
    out = np.empty(m, np.int64)
    step = (m + n_chunks - 1) // n_chunks
    for c in prange(n_chunks):
        dist = np.empty(n, np.int64)
        queue = np.empty(n, np.int64)
        lo = c * step
        hi = min(m, lo + step)
        for i in range(lo, hi):
            out[i] = _single_ecc(indptr, indices, nodes[i], dist, queue)
    return out


@njit(cache=True)
def batch_eccentricities(indptr, indices, sources, seen, frontier, nxt, out):
    """Eccentricities of up to 64 sources with one bit-parallel BFS.

    Bit i of ``seen[v]`` / ``frontier[v]`` tracks the search from
    ``sources[i]``, so one sweep over the edges advances every search by a
    level.
    """
    n = indptr.shape[0] - 1
    b = sources.shape[0]
    seen[:] = 0
    frontier[:] = 0
    one = np.uint64(1)
    for i in range(b):
        bit = one << np.uint64(i)
        seen[sources[i]] |= bit
        frontier[sources[i]] |= bit
        out[i] = 0
    level = 0
    advancing = True
    while advancing:
        level += 1
        nxt[:] = 0
        for u in range(n):
            f = frontier[u]
            if f:
                for k in range(indptr[u], indptr[u + 1]):
                    nxt[indices[k]] |= f
        reached = np.uint64(0)
        advancing = False
        for v in range(n):
            x = nxt[v] & ~seen[v]
            frontier[v] = x
            if x:
                seen[v] |= x
                reached |= x
                advancing = True
        if advancing:
            for i in range(b):
                if (reached >> np.uint64(i)) & one:
                    out[i] = level


@njit(cache=True)
def eccentricities_bounded(indptr, indices, stall_limit):
    """Exact eccentricities by iterated bound tightening.

    Keeps a lower and upper eccentricity bound for every unresolved node. A
    BFS from root v with eccentricity e gives, for each w at distance d,
    ``max(d, e - d) <= ecc(w) <= e + d``. Roots alternate between the
    unresolved node with the largest upper bound and the one with the
    smallest lower bound (ties: higher degree, then lower index). Degree-one
    nodes whose neighbour is resolved take ``ecc(neighbour) + 1``.

    A 64-wide bit-parallel batch costs about one BFS, so once
    ``stall_limit`` consecutive roots each resolve fewer than 64 nodes the
    remaining nodes are finished in batches. Returns (eccentricities,
    number of BFS sweeps). Assumes a connected graph.
    """
    n = indptr.shape[0] - 1
    ecc = np.full(n, -1, np.int64)
    lower = np.zeros(n, np.int64)
    upper = np.full(n, n, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    src = np.empty(1, np.int64)
    if n == 1:
        ecc[0] = 0
        return ecc, 0

    # unresolved nodes, compacted after each sweep
    active = np.arange(n).astype(np.int64)
    n_active = n
    runs = 0
    stalls = 0
    pick_high = True
    while n_active > 64 and stalls < stall_limit:
        best = active[0]
        for i in range(1, n_active):
            w = active[i]
            if pick_high:
                if upper[w] > upper[best]:
                    best = w
                    continue
                if upper[w] < upper[best]:
                    continue
            else:
                if lower[w] < lower[best]:
                    best = w
                    continue
                if lower[w] > lower[best]:
                    continue
            dw = indptr[w + 1] - indptr[w]
            db = indptr[best + 1] - indptr[best]
            if dw > db or (dw == db and w < best):
                best = w
        pick_high = not pick_high

        src[0] = best
        count = bfs_fill(indptr, indices, src, dist, queue)
        runs += 1
        e = dist[queue[count - 1]]
        ecc[best] = e
        lower[best] = e
        upper[best] = e

        before = n_active
        kept = 0
        for i in range(n_active):
            w = active[i]
            if ecc[w] >= 0:
                continue
            d = dist[w]
            lo = e - d
            if d > lo:
                lo = d
            if lo > lower[w]:
                lower[w] = lo
            if e + d < upper[w]:
                upper[w] = e + d
            if lower[w] == upper[w]:
                ecc[w] = lower[w]
            else:
                active[kept] = w
                kept += 1
        n_active = kept

        # pendant shortcut, valid whenever n > 2
        if n > 2:
            kept = 0
            for i in range(n_active):
                w = active[i]
                if indptr[w + 1] - indptr[w] == 1:
                    nb = indices[indptr[w]]
                    if ecc[nb] >= 0:
                        ecc[w] = ecc[nb] + 1
                        continue
                active[kept] = w
                kept += 1
            n_active = kept

        if before - n_active < 64:
            stalls += 1
        else:
            stalls = 0

    if n_active > 0:
        seen = np.empty(n, np.uint64)
        frontier = np.empty(n, np.uint64)
        nxt = np.empty(n, np.uint64)
        out = np.empty(64, np.int64)
        for lo in range(0, n_active, 64):
            hi = min(n_active, lo + 64)
            batch = active[lo:hi].copy()
            batch_eccentricities(indptr, indices, batch, seen, frontier, nxt, out)
            runs += 1
            for i in range(hi - lo):
                ecc[batch[i]] = out[i]
    return ecc, runs


@njit(cache=True)
def component_labels(indptr, indices):
    """Label components in order of their smallest node index."""
    n = indptr.shape[0] - 1
    comp = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    n_comp = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = n_comp
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if comp[w] < 0:
                    comp[w] = n_comp
                    queue[tail] = w
                    tail += 1
        n_comp += 1
    return comp, n_comp
