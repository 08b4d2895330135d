"""Viewer bundle: a self-contained JSON file for the interactive viewer.

Carries everything the figure cannot show statically, in particular every
node's full payload text for the click popup, beside the graph, layout, bands
and heat bars.  The format is schema-versioned; field names are documented in
docs/bundle_schema.md and loading rejects any unknown version.  Serialization
round-trips losslessly: load(save(bundle)) == bundle.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from pathlib import Path

from .document import SectionSpan
from .errors import BundleError
from .graph import CRMGraph
from .layout import ChangeBars, LayoutModel, LayoutRect

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class BundleNode:
    id: int
    tokens: tuple[str, ...]
    birth_rev: int
    state: str  # "alive" | "dead"
    death_rev: int | None
    author: str
    attach: int | None


@dataclass(frozen=True)
class BundleRevision:
    index: int
    author: str
    timestamp: str
    comment: str


@dataclass(frozen=True)
class ViewerBundle:
    schema_version: int
    nodes: tuple[BundleNode, ...]
    chain: tuple[int, ...]
    rects: tuple[LayoutRect, ...]
    edges: tuple[tuple[int, int], ...]
    author_bands: tuple[int, ...]
    section_bands: tuple[tuple[SectionSpan, int], ...]
    bars: ChangeBars
    revisions: tuple[BundleRevision, ...]
    compact: bool
    revision_count: int
    latest_len: int


def export_bundle(g: CRMGraph, m: LayoutModel) -> ViewerBundle:
    """Package a graph and its layout for the viewer."""
    nodes = tuple(
        BundleNode(
            id=node.id,
            tokens=tuple(t.text for t in node.tokens),
            birth_rev=node.birth_rev,
            state="alive" if node.alive else "dead",
            death_rev=node.death_rev,
            author=node.author,
            attach=node.attach,
        )
        for node in sorted(g.nodes.values(), key=lambda n: n.id)
    )
    revisions = tuple(
        BundleRevision(meta.index, meta.author, meta.timestamp, meta.comment)
        for meta in g.revisions
    )
    return ViewerBundle(
        schema_version=SCHEMA_VERSION,
        nodes=nodes,
        chain=tuple(g.chain),
        rects=m.rects,
        edges=m.edges,
        author_bands=m.author_bands,
        section_bands=m.section_bands,
        bars=m.bars,
        revisions=revisions,
        compact=m.compact,
        revision_count=m.revision_count,
        latest_len=m.latest_len,
    )


def bundle_to_json(bundle: ViewerBundle) -> str:
    doc = asdict(bundle)
    doc["section_bands"] = [
        {"title": span.title, "start": span.start, "end": span.end, "color_class": cls}
        for span, cls in bundle.section_bands
    ]
    return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def bundle_from_json(text: str) -> ViewerBundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise BundleError(f"malformed bundle JSON: {e}") from e
    if not isinstance(doc, dict) or "schema_version" not in doc:
        raise BundleError("not a viewer bundle: missing schema_version")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise BundleError(
            f"unsupported bundle schema_version {doc['schema_version']} "
            f"(this build reads version {SCHEMA_VERSION})")
    try:
        return ViewerBundle(
            schema_version=doc["schema_version"],
            nodes=tuple(BundleNode(
                id=n["id"], tokens=tuple(n["tokens"]), birth_rev=n["birth_rev"],
                state=n["state"], death_rev=n["death_rev"], author=n["author"],
                attach=n["attach"]) for n in doc["nodes"]),
            chain=tuple(doc["chain"]),
            rects=tuple(LayoutRect(r["node"], r["x0"], r["x1"], r["row"], r["kind"],
                                   r["shift"]) for r in doc["rects"]),
            edges=tuple((a, b) for a, b in doc["edges"]),
            author_bands=tuple(doc["author_bands"]),
            section_bands=tuple(
                (SectionSpan(sb["title"], sb["start"], sb["end"]), sb["color_class"])
                for sb in doc["section_bands"]),
            bars=ChangeBars(tuple(doc["bars"]["column_heat"]),
                            tuple(doc["bars"]["revision_heat"])),
            revisions=tuple(BundleRevision(r["index"], r["author"], r["timestamp"],
                                           r["comment"]) for r in doc["revisions"]),
            compact=doc["compact"],
            revision_count=doc["revision_count"],
            latest_len=doc["latest_len"],
        )
    except (KeyError, TypeError) as e:
        raise BundleError(f"malformed bundle: {e!r}") from e


def save_bundle(bundle: ViewerBundle, path: str | Path) -> None:
    """Write atomically: the target file appears only on success."""
    path = Path(path)
    tmp = path.with_name(f"{path.name}.tmp-{os.getpid()}")
    try:
        tmp.write_text(bundle_to_json(bundle), encoding="utf-8")
        os.replace(tmp, path)
    except OSError as e:
        tmp.unlink(missing_ok=True)
        raise BundleError(f"cannot write bundle {path}: {e}") from e


def load_bundle(path: str | Path) -> ViewerBundle:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise BundleError(f"cannot read bundle {path}: {e}") from e
    return bundle_from_json(text)
