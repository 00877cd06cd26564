import numpy as np
import pytest

from netlevels.centrality import (
    UNREACHABLE,
    DisconnectedGraphError,
    assign_levels,
    bfs_distances,
    eccentricities_of,
    eccentricity_profile,
)
from netlevels.graph import Graph, parse_edge_list

from oracles import floyd_warshall, levels_from_matrix, random_connected_edges


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_bfs_path_and_star():
    assert bfs_distances(path(3), 0).tolist() == [0, 1, 2]
    d = bfs_distances(star(5), 0)
    assert d[0] == 0 and set(d[1:].tolist()) == {1}


def test_bfs_unreachable_marker():
    g = parse_edge_list("a b\nc d\n")
    assert bfs_distances(g, 0).tolist() == [0, 1, UNREACHABLE, UNREACHABLE]


@pytest.mark.parametrize("source", [-1, 3])
def test_bfs_source_out_of_range(source):
    with pytest.raises(ValueError):
        bfs_distances(path(3), source)


@pytest.mark.parametrize("seed", range(10))
def test_bfs_matches_floyd_warshall(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 200))
    edges = random_connected_edges(n, int(rng.integers(0, 2 * n)), rng)
    g = Graph.from_edges(n, edges)
    fw = floyd_warshall(n, edges)
    for s in rng.integers(0, n, size=5):
        assert bfs_distances(g, int(s)).tolist() == fw[s]


@pytest.mark.parametrize("algorithm", ["naive", "pruned"])
def test_path_profile(algorithm):
    p = eccentricity_profile(path(5), algorithm)
    assert p.eccentricity.tolist() == [4, 3, 2, 3, 4]
    assert (p.radius, p.diameter, p.center) == (2, 4, (2,))


@pytest.mark.parametrize("algorithm", ["naive", "pruned"])
def test_cycle_profile(algorithm):
    p = eccentricity_profile(cycle(5), algorithm)
    assert p.eccentricity.tolist() == [2] * 5
    assert p.center == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("algorithm", ["naive", "pruned"])
def test_tiny_graphs(algorithm):
    assert eccentricity_profile(Graph.from_edges(1, []), algorithm).eccentricity.tolist() == [0]
    assert eccentricity_profile(path(2), algorithm).eccentricity.tolist() == [1, 1]
    assert eccentricity_profile(path(3), algorithm).eccentricity.tolist() == [2, 1, 2]


def test_disconnected_profile_names_two_nodes():
    g = parse_edge_list("a b\nc d\n")
    with pytest.raises(DisconnectedGraphError) as info:
        eccentricity_profile(g)
    u, v = info.value.nodes
    assert u == "a" and v in ("c", "d")


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        eccentricity_profile(path(3), "approx")


def _random_graph(seed, max_n=500):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, max_n))
    shape = rng.integers(0, 3)
    extra = [0, n // 4, 3 * n][shape]
    return n, random_connected_edges(n, int(rng.integers(0, extra + 1)), rng)


@pytest.mark.parametrize("seed", range(100))
def test_pruned_equals_naive(seed):
    n, edges = _random_graph(seed)
    g = Graph.from_edges(n, edges)
    a = eccentricity_profile(g, "naive")
    b = eccentricity_profile(g, "pruned")
    assert np.array_equal(a.eccentricity, b.eccentricity)
    assert (a.radius, a.diameter, a.center) == (b.radius, b.diameter, b.center)
    assert a.radius <= a.diameter <= 2 * a.radius
    assert b.bfs_runs <= n


@pytest.mark.parametrize("seed", range(15))
def test_eccentricity_is_attained_max_distance(seed):
    n, edges = _random_graph(1000 + seed, max_n=120)
    g = Graph.from_edges(n, edges)
    ecc = eccentricity_profile(g, "pruned").eccentricity
    for v in range(n):
        d = bfs_distances(g, v)
        assert ecc[v] >= d.max() and ecc[v] in d


def test_eccentricities_of_subset():
    g = path(7)
    assert eccentricities_of(g, [0, 3, 6]).tolist() == [6, 3, 6]
    assert eccentricities_of(g, []).tolist() == []
    with pytest.raises(ValueError):
        eccentricities_of(g, [7])


def test_naive_thread_count_does_not_change_output():
    n, edges = _random_graph(7)
    g = Graph.from_edges(n, edges)
    one = eccentricity_profile(g, "naive", threads=1).eccentricity
    many = eccentricity_profile(g, "naive", threads=4).eccentricity
    assert np.array_equal(one, many)


def test_levels_path():
    g = path(5)
    lv = assign_levels(g, eccentricity_profile(g))
    assert lv.level.tolist() == [3, 2, 1, 2, 3]
    assert lv.max_level == 3


def test_levels_triangle_with_pendant():
    g = parse_edge_list("a b\nb c\nc a\nd a\n")
    p = eccentricity_profile(g)
    assert p.center == (g.index_of("a"),)
    lv = assign_levels(g, p)
    assert dict(zip(g.labels, lv.level.tolist())) == {"a": 1, "b": 2, "c": 2, "d": 2}


def test_two_hops_from_center_is_level_three():
    g = path(5)
    lv = assign_levels(g, eccentricity_profile(g))
    assert lv.level[0] == 3


@pytest.mark.parametrize("seed", range(20))
def test_levels_match_matrix_oracle(seed):
    n, edges = _random_graph(2000 + seed, max_n=150)
    g = Graph.from_edges(n, edges)
    lv = assign_levels(g, eccentricity_profile(g))
    assert lv.level.tolist() == levels_from_matrix(floyd_warshall(n, edges))
    lev = lv.level
    assert np.all(np.abs(lev[g.edges[:, 0]] - lev[g.edges[:, 1]]) <= 1)


@pytest.mark.parametrize("stall_limit", [0, 1, 8, 10**9])
@pytest.mark.parametrize("seed", range(12))
def test_bounded_kernel_paths_agree_with_naive(seed, stall_limit):
    from netlevels import _kernels

    n, edges = _random_graph(3000 + seed, max_n=400)
    g = Graph.from_edges(n, edges)
    ecc, _ = _kernels.eccentricities_bounded(g.indptr, g.indices, stall_limit)
    assert np.array_equal(ecc, eccentricity_profile(g, "naive").eccentricity)


def test_batch_kernel_handles_full_and_partial_batches():
    from netlevels import _kernels

    rng = np.random.default_rng(5)
    n = 300
    g = Graph.from_edges(n, random_connected_edges(n, 150, rng))
    buffers = [np.empty(n, np.uint64) for _ in range(3)]
    out = np.empty(64, np.int64)
    want = eccentricity_profile(g, "naive").eccentricity
    for sources in (np.arange(64), np.arange(64, 101), np.array([7])):
        _kernels.batch_eccentricities(g.indptr, g.indices, sources.astype(np.int64), *buffers, out)
        assert out[: len(sources)].tolist() == want[sources].tolist()
