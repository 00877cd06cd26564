"""Edge typing from node levels, ground-truth agreement and per-type degrees."""

from __future__ import annotations

import enum
import io
import os
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from netlevels.centrality import LevelAssignment
from netlevels.graph import Graph, ParseError


class EdgeType(enum.IntEnum):
    P2C = 0
    P2P = 1


@dataclass(frozen=True)
class EdgeClassification:
    """Edge types aligned with ``Graph.edges`` (values of :class:`EdgeType`)."""

    label: np.ndarray
    p2c_count: int
    p2p_count: int

    def types(self) -> list[EdgeType]:
        return [EdgeType(x) for x in self.label.tolist()]


def classify_edges(g: Graph, levels: LevelAssignment) -> EdgeClassification:
    """Same-level edges are P2P, edges spanning adjacent levels are P2C."""
    level = np.asarray(levels.level)
    if len(level) != g.node_count:
        raise ValueError(f"level array has {len(level)} entries, graph has {g.node_count} nodes")
    gap = np.abs(level[g.edges[:, 0]] - level[g.edges[:, 1]])
    if gap.size and gap.max() > 1:
        raise ValueError("levels differ by more than one across an edge; not a BFS layering")
    label = np.where(gap == 0, EdgeType.P2P, EdgeType.P2C).astype(np.int8)
    label.setflags(write=False)
    p2p = int((gap == 0).sum())
    return EdgeClassification(label, g.edge_count - p2p, p2p)


def format_classification(g: Graph, c: EdgeClassification) -> str:
    names = [t.name for t in EdgeType]
    labs = g.labels
    return "".join(
        f"{labs[u]}\t{labs[v]}\t{names[t]}\n"
        for (u, v), t in zip(g.edges.tolist(), c.label.tolist())
    )


# ---------------------------------------------------------------- agreement


@dataclass(frozen=True)
class AgreementReport:
    matched: int
    compared: int
    agreement_fraction: float | None
    missing_in_truth: int
    unmatched_truth: int

    @property
    def agreement_percent(self) -> float | None:
        if self.agreement_fraction is None:
            return None
        return round(100.0 * self.agreement_fraction, 1)

    def to_dict(self) -> dict:
        return {
            "matched": self.matched,
            "compared": self.compared,
            "agreement_percent": self.agreement_percent,
            "missing_in_truth": self.missing_in_truth,
            "unmatched_truth": self.unmatched_truth,
        }


TruthTable = dict[frozenset, EdgeType]


def parse_truth_table(text: str | Iterable[str] | TextIO, comment_prefix: str = "#") -> TruthTable:
    """Parse ``u v TYPE`` lines; TYPE is P2C or P2P, orientation is ignored."""
    if isinstance(text, str):
        text = io.StringIO(text)
    table: TruthTable = {}
    for line_no, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith(comment_prefix):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v TYPE', got {line!r}", line_no)
        u, v, kind = parts
        try:
            etype = EdgeType[kind.upper()]
        except KeyError:
            raise ParseError(f"invalid edge type {kind!r}", line_no) from None
        key = frozenset((u, v))
        if table.get(key, etype) is not etype:
            raise ParseError(f"conflicting types for edge {u} {v}", line_no)
        table[key] = etype
    return table


def read_truth_table(path: str | os.PathLike) -> TruthTable:
    with open(path, encoding="utf-8") as fh:
        return parse_truth_table(fh)


def agreement(g: Graph, c: EdgeClassification, truth: TruthTable) -> AgreementReport:
    """Compare computed edge types against a truth table.

    Only edges present in both are compared. Graph edges without a truth row
    count as ``missing_in_truth``; truth rows naming no graph edge count as
    ``unmatched_truth``.
    """
    matched = compared = 0
    for (a, b), t in zip(g.edge_label_pairs(), c.label.tolist()):
        want = truth.get(frozenset((a, b)))
        if want is None:
            continue
        compared += 1
        matched += want == t
    fraction = matched / compared if compared else None
    return AgreementReport(
        matched=matched,
        compared=compared,
        agreement_fraction=fraction,
        missing_in_truth=g.edge_count - compared,
        unmatched_truth=len(truth) - compared,
    )


# ---------------------------------------------------------------- degrees


@dataclass(frozen=True)
class DegreeSequences:
    total: np.ndarray
    p2c: np.ndarray
    p2p: np.ndarray


def split_degree_sequences(g: Graph, c: EdgeClassification) -> DegreeSequences:
    if len(c.label) != g.edge_count:
        raise ValueError("classification does not match graph")
    n = g.node_count
    is_p2p = c.label == EdgeType.P2P
    p2p_ends = g.edges[is_p2p].ravel()
    p2c_ends = g.edges[~is_p2p].ravel()
    return DegreeSequences(
        total=g.degrees.copy(),
        p2c=np.bincount(p2c_ends, minlength=n),
        p2p=np.bincount(p2p_ends, minlength=n),
    )
