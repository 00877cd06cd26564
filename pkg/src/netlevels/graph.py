"""Graph representation, edge-list ingestion and connectivity."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

import numpy as np

from netlevels._kernels import component_labels


class ParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class NormalizationSummary:
    dropped_loops: int = 0
    collapsed_duplicates: int = 0

    def to_dict(self) -> dict:
        return {
            "dropped_loops": self.dropped_loops,
            "collapsed_duplicates": self.collapsed_duplicates,
        }


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on dense indices ``0..node_count-1``.

    ``edges`` is an (E, 2) array of canonical pairs ``u < v`` in
    lexicographic order. Adjacency is CSR: the neighbours of ``v`` are
    ``indices[indptr[v]:indptr[v + 1]]``, sorted ascending. ``labels[i]`` is
    the external label of node ``i``.
    """

    node_count: int
    edges: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple[str, ...]
    normalization: NormalizationSummary = field(default_factory=NormalizationSummary)

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        pairs: np.ndarray | Sequence[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a graph, dropping self-loops and collapsing duplicate edges."""
        arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= node_count):
            raise ValueError("edge endpoint out of range")
        if labels is None:
            labels = tuple(str(i) for i in range(node_count))
        else:
            labels = tuple(labels)
            if len(labels) != node_count:
                raise ValueError("label count does not match node_count")
            if len(set(labels)) != node_count:
                raise ValueError("node labels must be unique")

        loops = arr[:, 0] == arr[:, 1]
        n_loops = int(loops.sum())
        arr = arr[~loops]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * max(node_count, 1) + hi)
        n_dups = len(arr) - len(keys)
        edges = np.empty((len(keys), 2), dtype=np.int64)
        if node_count:
            edges[:, 0] = keys // node_count
            edges[:, 1] = keys % node_count

        # both orientations, sorted by (source, target) -> sorted CSR rows
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((dst, src))
        indices = dst[order].astype(np.int32)
        counts = np.bincount(src, minlength=node_count)
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])

        return cls(
            node_count=node_count,
            edges=_frozen(edges),
            indptr=_frozen(indptr),
            indices=_frozen(indices),
            labels=labels,
            normalization=NormalizationSummary(n_loops, n_dups),
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def index_of(self, label: str) -> int:
        lookup = self.__dict__.get("_index")
        if lookup is None:
            lookup = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_index", lookup)
        return lookup[label]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        k = np.searchsorted(row, v)
        return bool(k < len(row) and row[k] == v)

    def edge_label_pairs(self) -> list[tuple[str, str]]:
        labs = self.labels
        return [(labs[u], labs[v]) for u, v in self.edges.tolist()]

    def __repr__(self) -> str:
        return f"Graph(N={self.node_count}, E={self.edge_count})"


def parse_edge_list(
    text: str | Iterable[str] | TextIO,
    comment_prefix: str = "#",
    delimiter: str | None = None,
) -> Graph:
    """Parse two-token-per-line edge-list text into a normalized Graph.

    Node indices follow first appearance. Blank lines and lines starting with
    ``comment_prefix`` are skipped. ``delimiter=None`` splits on whitespace.
    """
    if isinstance(text, str):
        text = io.StringIO(text)
    index: dict[str, int] = {}
    flat: list[int] = []
    for line_no, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or (comment_prefix and line.startswith(comment_prefix)):
            continue
        parts = line.split(delimiter)
        if delimiter is not None:
            parts = [p.strip() for p in parts]
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(f"expected 2 tokens, got {len(parts)}: {line!r}", line_no)
        for tok in parts:
            i = index.get(tok)
            if i is None:
                i = index[tok] = len(index)
            flat.append(i)
    if not flat:
        raise ParseError("empty edge list")
    return Graph.from_edges(len(index), np.array(flat, dtype=np.int64), list(index))


def read_edge_list(path: str | os.PathLike, **options) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, **options)


def format_edge_list(g: Graph) -> str:
    labs = g.labels
    return "".join(f"{labs[u]} {labs[v]}\n" for u, v in g.edges.tolist())


def write_edge_list(g: Graph, path: str | os.PathLike, header: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        fh.write(format_edge_list(g))


@dataclass(frozen=True)
class ConnectivityReport:
    component_id: np.ndarray
    component_sizes: list[int]
    lcc_index: int

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    @property
    def is_connected(self) -> bool:
        return len(self.component_sizes) == 1


def connected_components(g: Graph) -> ConnectivityReport:
    """Component ids are numbered in order of each component's smallest node."""
    comp, n_comp = component_labels(g.indptr, g.indices)
    sizes = np.bincount(comp, minlength=n_comp).tolist()
    # argmax returns the first maximum, i.e. the smallest component id
    lcc = int(np.argmax(sizes)) if sizes else 0
    return ConnectivityReport(_frozen(comp), sizes, lcc)


def largest_component(g: Graph, r: ConnectivityReport) -> Graph:
    """Induced subgraph on the largest component; relative node order kept."""
    if r.is_connected:
        return g
    keep = np.flatnonzero(r.component_id == r.lcc_index)
    remap = np.full(g.node_count, -1, dtype=np.int64)
    remap[keep] = np.arange(len(keep))
    mask = remap[g.edges[:, 0]] >= 0
    sub = remap[g.edges[mask]]
    out = Graph.from_edges(len(keep), sub, [g.labels[i] for i in keep])
    object.__setattr__(out, "normalization", g.normalization)
    return out
