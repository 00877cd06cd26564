"""Eccentricities, graph center and levels measured from the center."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numba
import numpy as np

from netlevels import _kernels
from netlevels.graph import Graph, connected_components

#: Distance marker for nodes a search never reaches.
UNREACHABLE = -1

EccAlgorithm = Literal["naive", "pruned"]

# consecutive low-yield bound-tightening roots before switching to batched BFS
STALL_LIMIT = 8


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""

    def __init__(self, u: str, v: str):
        self.nodes = (u, v)
        super().__init__(f"graph is disconnected: no path between {u!r} and {v!r}")


@dataclass(frozen=True)
class EccentricityProfile:
    eccentricity: np.ndarray
    radius: int
    diameter: int
    center: tuple[int, ...]
    algorithm: str = "naive"
    bfs_runs: int = 0


@dataclass(frozen=True)
class LevelAssignment:
    level: np.ndarray
    max_level: int


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable nodes get UNREACHABLE."""
    if not 0 <= source < g.node_count:
        raise ValueError(f"source {source} out of range for {g.node_count} nodes")
    dist = np.empty(g.node_count, dtype=np.int64)
    queue = np.empty(g.node_count, dtype=np.int64)
    _kernels.bfs_fill(g.indptr, g.indices, np.array([source], dtype=np.int64), dist, queue)
    return dist


def require_connected(g: Graph) -> None:
    if g.node_count == 0:
        raise ValueError("empty graph")
    r = connected_components(g)
    if not r.is_connected:
        other = int(np.flatnonzero(r.component_id != r.component_id[0])[0])
        raise DisconnectedGraphError(g.labels[0], g.labels[other])


def _chunks(threads: int | None) -> int:
    if threads is not None:
        numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
    return max(1, numba.get_num_threads()) * 4


def eccentricities_of(g: Graph, nodes: Iterable[int], threads: int | None = None) -> np.ndarray:
    """Exact eccentricities of selected nodes, one BFS each (connected graphs)."""
    nodes = np.asarray(list(nodes), dtype=np.int64)
    if nodes.size == 0:
        return np.empty(0, dtype=np.int64)
    if nodes.min() < 0 or nodes.max() >= g.node_count:
        raise ValueError("node index out of range")
    return _kernels.eccentricities_naive(g.indptr, g.indices, nodes, _chunks(threads))


def eccentricity_profile(
    g: Graph, algorithm: EccAlgorithm = "pruned", threads: int | None = None
) -> EccentricityProfile:
    """Exact eccentricity of every node plus radius, diameter and center.

    ``naive`` runs one BFS per node (parallel over ``threads``). ``pruned``
    skips nodes whose eccentricity bounds have met and finishes the rest
    with 64-wide bit-parallel searches; both return identical eccentricities.
    """
    require_connected(g)
    if algorithm == "naive":
        nodes = np.arange(g.node_count, dtype=np.int64)
        ecc = _kernels.eccentricities_naive(g.indptr, g.indices, nodes, _chunks(threads))
        runs = g.node_count
    elif algorithm == "pruned":
        ecc, runs = _kernels.eccentricities_bounded(g.indptr, g.indices, STALL_LIMIT)
    else:
        raise ValueError(f"unknown eccentricity algorithm {algorithm!r}")
    ecc.setflags(write=False)
    radius = int(ecc.min())
    center = tuple(int(v) for v in np.flatnonzero(ecc == radius))
    return EccentricityProfile(ecc, radius, int(ecc.max()), center, algorithm, int(runs))


def assign_levels(g: Graph, profile: EccentricityProfile) -> LevelAssignment:
    """Level 1 for center nodes, otherwise 1 + hops to the nearest center."""
    if not profile.center:
        raise ValueError("empty center set")
    if len(profile.eccentricity) != g.node_count:
        raise ValueError("profile does not match graph")
    dist = np.empty(g.node_count, dtype=np.int64)
    queue = np.empty(g.node_count, dtype=np.int64)
    sources = np.array(profile.center, dtype=np.int64)
    reached = _kernels.bfs_fill(g.indptr, g.indices, sources, dist, queue)
    if reached != g.node_count:
        missing = int(np.flatnonzero(dist < 0)[0])
        raise DisconnectedGraphError(g.labels[profile.center[0]], g.labels[missing])
    level = dist + 1
    level.setflags(write=False)
    return LevelAssignment(level, int(level.max()))
