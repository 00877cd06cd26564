"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import math

import numpy as np

INF = math.inf


def random_connected_edges(n: int, extra: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Random spanning tree (random parent links) plus ``extra`` random chords."""
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    for _ in range(extra):
        a, b = rng.integers(0, n, size=2)
        edges.append((int(a), int(b)))
    perm = rng.permutation(n)
    return [(int(perm[a]), int(perm[b])) for a, b in edges]


def gnp_edges(n: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def union_find_labels(n: int, edges) -> list[int]:
    """Component representative per node, canonicalized to the smallest member."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [find(v) for v in range(n)]


def floyd_warshall(n: int, edges) -> list[list[float]]:
    d = [[INF] * n for _ in range(n)]
    for v in range(n):
        d[v][v] = 0
    for a, b in edges:
        if a != b:
            d[a][b] = d[b][a] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def levels_from_matrix(dist) -> list[int]:
    """Center = min eccentricity; level = 1 + distance to the closest center."""
    ecc = [max(row) for row in dist]
    radius = min(ecc)
    center = [v for v, e in enumerate(ecc) if e == radius]
    return [1 + min(row[c] for c in center) for row in dist]


def two_pass_pearson(xs, ys) -> float:
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    vx = sum((x - mx) ** 2 for x in xs)
    vy = sum((y - my) ** 2 for y in ys)
    return cov / math.sqrt(vx * vy)


def recount_ccdf(degrees, k: int) -> float:
    kept = [d for d in degrees if d >= 1]
    return sum(1 for d in kept if d >= k) / len(kept)


def floyd_warshall_np(n: int, edges) -> np.ndarray:
    """Cubic all-pairs hop distances, vectorized over rows (inf = unreachable)."""
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    for a, b in edges:
        if a != b:
            d[a, b] = d[b, a] = 1
    for k in range(n):
        np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :], out=d)
    return d
