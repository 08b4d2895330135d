"""History-Flow view: the whole document at every revision, colored by author.

Obtained from the revision map by accumulating its rows: scripts are replayed
top-down while every token keeps the author of the revision that introduced
it, and each revision snapshot is recorded as run-length author segments.
Segment lengths of column r always sum to the length of revision r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .delta import DeltaScript, EditOp, application_order
from .graph import CRMGraph


@dataclass(frozen=True)
class Segment:
    author: str
    length: int


@dataclass(frozen=True)
class HFModel:
    columns: tuple[tuple[Segment, ...], ...]  # one per revision
    revision_authors: tuple[str, ...]


def to_history_flow(g: CRMGraph, scripts: list[DeltaScript]) -> HFModel:
    """Accumulate the graph's generating scripts into per-revision author
    columns, merging adjacent same-author tokens into segments."""
    if len(scripts) != g.revision_count:
        raise ValueError(
            f"got {len(scripts)} scripts for {g.revision_count} revisions")
    authors = tuple(meta.author for meta in g.revisions)
    tags: list[str] = []  # author of the revision that introduced each token
    columns = []
    for script, author in zip(scripts, authors):
        for d in application_order(script):
            if d.op is EditOp.DELETE:
                del tags[d.position : d.position + len(d.payload)]
            else:
                tags[d.position : d.position] = [author] * len(d.payload)
        columns.append(_segments(tags))
    return HFModel(tuple(columns), authors)


def _segments(tags: list[str]) -> tuple[Segment, ...]:
    segments: list[Segment] = []
    for tag in tags:
        if segments and segments[-1].author == tag:
            segments[-1] = Segment(tag, segments[-1].length + 1)
        else:
            segments.append(Segment(tag, 1))
    return tuple(segments)
