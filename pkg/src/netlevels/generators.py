"""Seeded BA and extended-BA (link addition + rewiring) network growth.

BA starts from a path on ``m0`` nodes and attaches each new node to
``min(m, nodes so far)`` distinct targets drawn uniformly from the running
list of edge endpoints (degree-proportional selection).

EBA starts from ``m0`` isolated nodes. Each step draws u ~ U[0, 1):

* ``u < p``: add ``m`` links, each from a uniform node to a node chosen with
  probability ``(k_i + 1) / sum_j (k_j + 1)``;
* ``p <= u < p + q``: rewire ``m`` links: take a uniform node ``i`` with an
  edge, drop a uniform incident edge ``(i, j)`` and reconnect ``i`` to a
  ``(k + 1)``-preferential node;
* otherwise add one node with ``m`` preferential links.

Self-loops and duplicate edges are redrawn up to ``MAX_RETRIES`` times, after
which the draw is skipped and counted.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from netlevels.graph import Graph
from netlevels.rng import ALGORITHM, RandomStream

MAX_RETRIES = 64


@dataclass(frozen=True)
class BAConfig:
    m0: int
    m: int
    t: int
    seed: int = 0

    def validate(self) -> None:
        if self.m0 < 2:
            raise ValueError("m0 must be >= 2")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.t < 1:
            raise ValueError("t must be >= 1")


@dataclass(frozen=True)
class EBAConfig:
    p: float
    q: float
    m: int
    m0: int
    t: int
    seed: int = 0

    def validate(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        if self.p + self.q >= 1:
            raise ValueError(f"p + q must be < 1, got {self.p + self.q:g}")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.m0 < 2:
            raise ValueError("m0 must be >= 2")
        if self.t < 1:
            raise ValueError("t must be >= 1")


@dataclass
class GenerationReport:
    model: str
    config: dict
    rng: str = ALGORITHM
    node_count: int = 0
    edge_count: int = 0
    isolated_nodes: int = 0
    actions: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GenerationResult:
    graph: Graph
    report: GenerationReport


def ba_edge_count(cfg: BAConfig) -> int:
    """Edges produced by :func:`generate_ba` under the capping rule."""
    return (cfg.m0 - 1) + sum(min(cfg.m, cfg.m0 + s) for s in range(cfg.t))


def pick_endpoint(endpoints: list[int], rng: RandomStream) -> int:
    """Degree-proportional node choice from a list holding each edge's two ends."""
    return endpoints[rng.below(len(endpoints))]


def _grow_ba(cfg: BAConfig) -> GenerationResult:
    cfg.validate()
    rng = RandomStream(cfg.seed)
    n = cfg.m0
    src = list(range(cfg.m0 - 1))
    dst = list(range(1, cfg.m0))
    endpoints = src + dst
    for _ in range(cfg.t):
        want = min(cfg.m, n)
        chosen: list[int] = []
        while len(chosen) < want:
            v = pick_endpoint(endpoints, rng)
            if v not in chosen:
                chosen.append(v)
        for v in chosen:
            src.append(n)
            dst.append(v)
            endpoints.append(n)
            endpoints.append(v)
        n += 1
    g = Graph.from_edges(n, np.column_stack([src, dst]))
    report = GenerationReport(
        model="ba",
        config=asdict(cfg),
        node_count=g.node_count,
        edge_count=g.edge_count,
        isolated_nodes=int((g.degrees == 0).sum()),
        actions={"add_node": cfg.t},
    )
    return GenerationResult(g, report)


def generate_ba(cfg: BAConfig) -> Graph:
    return _grow_ba(cfg).graph


class _Fenwick:
    """Prefix sums over node weights for O(log n) weighted sampling."""

    def __init__(self, capacity: int):
        self.tree = [0] * (capacity + 1)
        self.size = capacity
        self.total = 0
        self.top = 1 << capacity.bit_length()

    def add(self, i: int, delta: int) -> None:
        self.total += delta
        i += 1
        tree = self.tree
        while i <= self.size:
            tree[i] += delta
            i += i & -i

    def find(self, r: int) -> int:
        """Smallest index whose inclusive prefix sum exceeds ``r``."""
        pos = 0
        tree = self.tree
        step = self.top
        while step:
            nxt = pos + step
            if nxt <= self.size and tree[nxt] <= r:
                pos = nxt
                r -= tree[nxt]
            step >>= 1
        return pos


class _EBAState:
    def __init__(self, cfg: EBAConfig):
        self.rng = RandomStream(cfg.seed)
        self.weights = _Fenwick(cfg.m0 + cfg.t)
        # neighbour list + position map per node, for O(1) uniform pick and removal
        self.nbrs: list[list[int]] = []
        self.pos: list[dict[int, int]] = []
        # nodes with degree >= 1, same list + position trick
        self.linked: list[int] = []
        self.linked_pos: dict[int, int] = {}
        self.edge_count = 0
        for _ in range(cfg.m0):
            self.add_node()

    @property
    def n(self) -> int:
        return len(self.nbrs)

    def add_node(self) -> int:
        v = len(self.nbrs)
        self.nbrs.append([])
        self.pos.append({})
        self.weights.add(v, 1)
        return v

    def preferential(self) -> int:
        return self.weights.find(self.rng.below(self.weights.total))

    def can_link(self, a: int, b: int) -> bool:
        return a != b and b not in self.pos[a]

    def _attach(self, a: int, b: int) -> None:
        if not self.nbrs[a]:
            self.linked_pos[a] = len(self.linked)
            self.linked.append(a)
        self.pos[a][b] = len(self.nbrs[a])
        self.nbrs[a].append(b)
        self.weights.add(a, 1)

    def _detach(self, a: int, b: int) -> None:
        row, index = self.nbrs[a], self.pos[a]
        k = index.pop(b)
        last = row.pop()
        if last != b:
            row[k] = last
            index[last] = k
        self.weights.add(a, -1)
        if not row:
            k = self.linked_pos.pop(a)
            last = self.linked.pop()
            if last != a:
                self.linked[k] = last
                self.linked_pos[last] = k

    def link(self, a: int, b: int) -> None:
        self._attach(a, b)
        self._attach(b, a)
        self.edge_count += 1

    def unlink(self, a: int, b: int) -> None:
        self._detach(a, b)
        self._detach(b, a)
        self.edge_count -= 1

    def add_random_link(self) -> bool:
        for _ in range(MAX_RETRIES):
            a = self.rng.below(self.n)
            b = self.preferential()
            if self.can_link(a, b):
                self.link(a, b)
                return True
        return False

    def rewire_one(self) -> bool:
        if not self.linked:
            return False
        i = self.linked[self.rng.below(len(self.linked))]
        j = self.nbrs[i][self.rng.below(len(self.nbrs[i]))]
        self.unlink(i, j)
        for _ in range(MAX_RETRIES):
            k = self.preferential()
            if self.can_link(i, k):
                self.link(i, k)
                return True
        self.link(i, j)
        return False

    def add_linked_node(self, m: int) -> int:
        """New node with up to ``m`` preferential links; returns skipped draws."""
        targets: list[int] = []
        want = min(m, self.n)
        while len(targets) < want:
            for _ in range(MAX_RETRIES):
                b = self.preferential()
                if b not in targets:
                    targets.append(b)
                    break
            else:
                break
        v = self.add_node()
        for b in targets:
            self.link(v, b)
        return want - len(targets)

    def edges(self) -> np.ndarray:
        out = [(a, b) for a, row in enumerate(self.nbrs) for b in row if a < b]
        return np.array(out, dtype=np.int64).reshape(-1, 2)


def _grow_eba(cfg: EBAConfig) -> GenerationResult:
    cfg.validate()
    st = _EBAState(cfg)
    actions = {"add_links": 0, "rewire": 0, "add_node": 0}
    skipped = {"add_links": 0, "rewire": 0, "add_node": 0}
    for _ in range(cfg.t):
        u = st.rng.random()
        before = st.edge_count
        if u < cfg.p:
            actions["add_links"] += 1
            for _ in range(cfg.m):
                if not st.add_random_link():
                    skipped["add_links"] += 1
            assert st.edge_count >= before
        elif u < cfg.p + cfg.q:
            actions["rewire"] += 1
            for _ in range(cfg.m):
                if not st.rewire_one():
                    skipped["rewire"] += 1
            assert st.edge_count == before
        else:
            actions["add_node"] += 1
            skipped["add_node"] += st.add_linked_node(cfg.m)
            assert st.edge_count >= before
    g = Graph.from_edges(st.n, st.edges())
    report = GenerationReport(
        model="eba",
        config=asdict(cfg),
        node_count=g.node_count,
        edge_count=g.edge_count,
        isolated_nodes=int((g.degrees == 0).sum()),
        actions=actions,
        skipped=skipped,
    )
    return GenerationResult(g, report)


def generate_eba(cfg: EBAConfig) -> Graph:
    return _grow_eba(cfg).graph


def generate(cfg: BAConfig | EBAConfig) -> GenerationResult:
    """Run either model and return the graph with its generation report."""
    if isinstance(cfg, BAConfig):
        return _grow_ba(cfg)
    if isinstance(cfg, EBAConfig):
        return _grow_eba(cfg)
    raise TypeError(f"unsupported config {type(cfg).__name__}")
