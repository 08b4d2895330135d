"""Space-time layout: map graph nodes to document-position/revision coordinates.

The x axis is token position in the latest revision, the y axis is revision
number.  Every node gets one rectangle at the row of its birth revision:
alive nodes span their token range in the latest revision, dead nodes hang
just after their anchor node in a parallel lane (deleted spans may overlap;
rendering resolves that by stacking, not coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .document import SectionSpan
from .graph import CRMGraph, NodeId

PERSISTENT = "persistent"
DELETED = "deleted"

DEFAULT_MAX_BUCKETS = 512
HEAT_SCALES = ("linear", "log")


@dataclass(frozen=True)
class LayoutRect:
    """One node's rectangle: x in latest-revision token units, row = the
    revision that introduced the content.

    ``shift`` counts how many chain gaps precede the rect when the renderer
    spreads chain neighbors apart (non-compact mode): the chain index for
    alive nodes, the anchor's value for dead ones.
    """

    node: NodeId
    x0: int
    x1: int
    row: int
    kind: str  # PERSISTENT or DELETED
    shift: int = 0

    def __post_init__(self) -> None:
        if self.x1 <= self.x0:
            raise ValueError(f"rect must have positive width, got [{self.x0}, {self.x1})")


@dataclass(frozen=True)
class ChangeBars:
    """Cumulative-change heat: per document-position bucket and per revision,
    max-normalized to [0, 1]."""

    column_heat: tuple[float, ...]
    revision_heat: tuple[float, ...]


@dataclass(frozen=True)
class LayoutModel:
    rects: tuple[LayoutRect, ...]
    edges: tuple[tuple[NodeId, NodeId], ...]
    author_bands: tuple[int, ...]
    section_bands: tuple[tuple[SectionSpan, int], ...]
    bars: ChangeBars
    compact: bool
    revision_count: int
    latest_len: int


def _alive_spans(g: CRMGraph) -> dict[NodeId, tuple[int, int]]:
    spans = {}
    cum = 0
    for node_id in g.chain:
        width = len(g.nodes[node_id].tokens)
        spans[node_id] = (cum, cum + width)
        cum += width
    return spans


def _rect_spans(g: CRMGraph) -> list[LayoutRect]:
    """Rectangles for every node: alive nodes in chain order, then dead nodes
    anchored after their attach node (resolved through chains of dead
    anchors; a node with no anchor sits at the document start)."""
    spans = _alive_spans(g)
    chain_index = {node_id: ci for ci, node_id in enumerate(g.chain)}
    rects = [
        LayoutRect(node_id, spans[node_id][0], spans[node_id][1],
                   g.nodes[node_id].birth_rev, PERSISTENT, ci)
        for ci, node_id in enumerate(g.chain)
    ]

    dead_end: dict[NodeId, tuple[int, int]] = {}  # id -> (x1, shift)

    def anchor_end(node_id: NodeId | None) -> tuple[int, int]:
        if node_id is None:
            return 0, 0
        if node_id in spans:
            return spans[node_id][1], chain_index[node_id]
        if node_id in dead_end:
            return dead_end[node_id]
        node = g.nodes[node_id]
        base, shift = anchor_end(node.attach)
        dead_end[node_id] = (base + len(node.tokens), shift)
        return dead_end[node_id]

    for node in g.dead_nodes():
        x1, shift = anchor_end(node.id)
        rects.append(
            LayoutRect(node.id, x1 - len(node.tokens), x1, node.birth_rev, DELETED, shift))
    return rects


def compute_change_bars(g: CRMGraph, buckets: int | None = None,
                        scale: str = "linear") -> ChangeBars:
    """Heat vectors: per-bucket edit weight over document positions and
    per-revision edited token counts, each normalized by its maximum.

    Every rectangle counts once, weighted by how many of its tokens overlap
    a bucket; revision heat counts tokens added plus tokens deleted.
    """
    if scale not in HEAT_SCALES:
        raise ValueError(f"unknown heat scale {scale!r} (expected one of {HEAT_SCALES})")
    rects = _rect_spans(g)
    latest_len = sum(len(g.nodes[i].tokens) for i in g.chain)
    extent = max([latest_len] + [r.x1 for r in rects])
    if buckets is None:
        buckets = max(1, min(latest_len, DEFAULT_MAX_BUCKETS))
    if buckets < 1:
        raise ValueError(f"bucket count must be >= 1, got {buckets}")

    column = np.zeros(buckets)
    if extent > 0:
        edges = np.linspace(0.0, float(extent), buckets + 1)
        for r in rects:
            overlap = np.minimum(r.x1, edges[1:]) - np.maximum(r.x0, edges[:-1])
            column += np.clip(overlap, 0.0, None)

    revision = np.zeros(g.revision_count)
    for node in g.nodes.values():
        if 1 <= node.birth_rev <= g.revision_count:
            revision[node.birth_rev - 1] += len(node.tokens)
        if node.death_rev is not None and 1 <= node.death_rev <= g.revision_count:
            revision[node.death_rev - 1] += len(node.tokens)

    return ChangeBars(_normalize(column, scale), _normalize(revision, scale))


def _normalize(values: np.ndarray, scale: str) -> tuple[float, ...]:
    if len(values) == 0 or values.max() <= 0:
        return tuple(float(v) for v in values)
    if scale == "log":
        values = np.log1p(values)
    return tuple(float(v) for v in values / values.max())


def assign_author_bands(g: CRMGraph) -> tuple[int, ...]:
    """Stable author color classes, one per revision, numbered in order of
    first appearance."""
    classes: dict[str, int] = {}
    bands = []
    for meta in g.revisions:
        bands.append(classes.setdefault(meta.author, len(classes)))
    return tuple(bands)


def layout(g: CRMGraph, sections: list[SectionSpan] | None = None,
           compact: bool = False, buckets: int | None = None,
           heat_scale: str = "linear") -> LayoutModel:
    """Assemble the full layout model for one graph.

    ``compact`` is recorded for the renderer: it drops the visual gaps
    between chain neighbors so connectors become vertical lines.  The token
    coordinates here are identical in both modes.
    """
    rects = _rect_spans(g)
    edges = tuple(zip(g.chain, g.chain[1:]))
    section_bands = tuple((span, k) for k, span in enumerate(sections or []))
    return LayoutModel(
        rects=tuple(rects),
        edges=edges,
        author_bands=assign_author_bands(g),
        section_bands=section_bands,
        bars=compute_change_bars(g, buckets=buckets, scale=heat_scale),
        compact=compact,
        revision_count=g.revision_count,
        latest_len=sum(len(g.nodes[i].tokens) for i in g.chain),
    )
