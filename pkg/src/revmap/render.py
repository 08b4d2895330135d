"""Static SVG rendering of layout models.

Output is deterministic: identical inputs produce byte-identical documents.
The pixel mapping here is the reference geometry for any interactive client
(see docs/bundle_schema.md); keep the two in sync when changing it.

Draw order, back to front: frame, author bands, section bands, edges, node
rectangles, top heat bar, right heat bar.  Persistent content is gray,
deleted content red, author bands pastel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .historyflow import HFModel
from .layout import DELETED, PERSISTENT, LayoutModel, LayoutRect

# fraction of a row band occupied by each lane; dead rects sit in a lower
# sub-lane so they never cover alive content of the same revision row
ALIVE_LANE = (0.08, 0.50)
DEAD_LANE = (0.62, 0.30)
EDGE_Y = 0.33


def _pastels() -> tuple[str, ...]:
    return ("#f6cfc4", "#c7dcf4", "#cdeec6", "#f4d8ef", "#f8efc0",
            "#d7d2f3", "#c4ecea", "#e8d3b8")


def _tints() -> tuple[str, ...]:
    return ("#ffffff", "#dce6f1")


@dataclass(frozen=True)
class StyleConfig:
    """Colors and pixel scales for the static figure."""

    persistent_color: str = "#d9d9d9"
    deleted_color: str = "#cc8080"
    rect_stroke: str = "#4a4a4a"
    edge_color: str = "#8c8c8c"
    author_palette: tuple[str, ...] = field(default_factory=_pastels)
    section_palette: tuple[str, ...] = field(default_factory=_tints)
    heat_colormap: str = "ember"
    x_per_token: float = 8.0
    y_per_rev: float = 14.0
    chain_gap: float = 3.0
    margin: float = 4.0
    bar_size: float = 9.0
    bar_gap: float = 3.0
    hf_col_width: float = 22.0
    hf_col_gap: float = 6.0
    hf_y_per_token: float = 2.0

    def __post_init__(self) -> None:
        if not self.author_palette or not self.section_palette:
            raise ValueError("palettes must be non-empty")
        for name in ("x_per_token", "y_per_rev", "hf_col_width", "hf_y_per_token"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")


_COLORMAPS = {
    "ember": ((0.0, (43, 26, 51)), (0.35, (144, 48, 58)),
              (0.7, (224, 112, 40)), (1.0, (255, 217, 74))),
    "gray": ((0.0, (32, 32, 32)), (1.0, (240, 240, 240))),
}


def heat_color(value: float, colormap: str = "ember") -> str:
    """Map a normalized heat value in [0, 1] to a hex color (brighter =
    more change)."""
    stops = _COLORMAPS.get(colormap)
    if stops is None:
        raise ValueError(f"unknown heat colormap {colormap!r} (expected one of {sorted(_COLORMAPS)})")
    v = min(1.0, max(0.0, value))
    for (v0, c0), (v1, c1) in zip(stops, stops[1:]):
        if v <= v1:
            t = 0.0 if v1 == v0 else (v - v0) / (v1 - v0)
            rgb = tuple(round(a + (b - a) * t) for a, b in zip(c0, c1))
            return "#{:02x}{:02x}{:02x}".format(*rgb)
    return "#{:02x}{:02x}{:02x}".format(*stops[-1][1])


def _fmt(v: float) -> str:
    out = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if out == "-0" else out


def _rect_el(x: float, y: float, w: float, h: float, fill: str, extra: str = "") -> str:
    return (f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}"'
            f' fill="{fill}"{extra}/>')


def rect_pixel_box(rect: LayoutRect, m: LayoutModel, s: StyleConfig) -> tuple[float, float, float, float]:
    """Pixel (x, y, width, height) of one node rectangle.

    x spreads chain members apart by ``chain_gap`` per shift step unless the
    model is compact; y picks the alive or dead sub-lane of the row band.
    """
    gap = 0.0 if m.compact else s.chain_gap
    mx, my = _matrix_origin(s)
    x = mx + rect.x0 * s.x_per_token + rect.shift * gap
    w = (rect.x1 - rect.x0) * s.x_per_token
    lane = ALIVE_LANE if rect.kind == PERSISTENT else DEAD_LANE
    y = my + (rect.row - 1) * s.y_per_rev + lane[0] * s.y_per_rev
    h = lane[1] * s.y_per_rev
    return x, y, w, h


def _matrix_origin(s: StyleConfig) -> tuple[float, float]:
    return s.margin, s.margin + s.bar_size + s.bar_gap


def _content_width(m: LayoutModel, s: StyleConfig) -> float:
    gap = 0.0 if m.compact else s.chain_gap
    extent = m.latest_len * s.x_per_token
    for rect in m.rects:
        extent = max(extent, rect.x1 * s.x_per_token + rect.shift * gap)
    if not m.compact and m.rects:
        extent += gap
    return max(extent, s.x_per_token)


def render_svg(m: LayoutModel, s: StyleConfig | None = None) -> str:
    """Emit the revision-map figure as an SVG 1.1 document."""
    s = s or StyleConfig()
    mx, my = _matrix_origin(s)
    content_w = _content_width(m, s)
    rows_h = max(m.revision_count, 1) * s.y_per_rev
    width = mx + content_w + s.bar_gap + s.bar_size + s.margin
    height = my + rows_h + s.margin

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        _rect_el(0, 0, width, height, "#ffffff",
                 f' stroke="{s.rect_stroke}" stroke-width="1" class="frame"'),
    ]

    out.append('<g class="author-bands">')
    for r, cls in enumerate(m.author_bands, start=1):
        fill = s.author_palette[cls % len(s.author_palette)]
        out.append(_rect_el(mx, my + (r - 1) * s.y_per_rev, content_w, s.y_per_rev, fill))
    out.append('</g>')

    out.append('<g class="section-bands">')
    for span, cls in m.section_bands:
        fill = s.section_palette[cls % len(s.section_palette)]
        x = mx + span.start * s.x_per_token
        w = (span.end - span.start) * s.x_per_token
        el = _rect_el(x, my, w, rows_h, fill, ' fill-opacity="0.45"')
        if span.title:
            el = el[:-2] + f'><title>{escape(span.title)}</title></rect>'
        out.append(el)
    out.append('</g>')

    boxes = {rect.node: rect_pixel_box(rect, m, s) for rect in m.rects}
    rows = {rect.node: rect.row for rect in m.rects}

    out.append(f'<g class="edges" stroke="{s.edge_color}" stroke-width="1">')
    for a, b in m.edges:
        ax = boxes[a][0] + boxes[a][2]
        bx = boxes[b][0]
        ay = my + (rows[a] - 1 + EDGE_Y) * s.y_per_rev
        by = my + (rows[b] - 1 + EDGE_Y) * s.y_per_rev
        if m.compact and rows[a] == rows[b]:
            continue
        out.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}"/>')
    out.append('</g>')

    out.append(f'<g class="nodes" stroke="{s.rect_stroke}" stroke-width="0.5">')
    for rect in m.rects:
        x, y, w, h = boxes[rect.node]
        fill = s.persistent_color if rect.kind == PERSISTENT else s.deleted_color
        out.append(_rect_el(x, y, w, h, fill, f' class="{rect.kind}"'))
    out.append('</g>')

    out.append('<g class="top-bar">')
    buckets = m.bars.column_heat
    if buckets:
        bw = content_w / len(buckets)
        for b, v in enumerate(buckets):
            out.append(_rect_el(mx + b * bw, s.margin, bw, s.bar_size,
                                heat_color(v, s.heat_colormap)))
    out.append('</g>')

    out.append('<g class="right-bar">')
    for r, v in enumerate(m.bars.revision_heat, start=1):
        out.append(_rect_el(mx + content_w + s.bar_gap, my + (r - 1) * s.y_per_rev,
                            s.bar_size, s.y_per_rev, heat_color(v, s.heat_colormap)))
    out.append('</g>')

    out.append('</svg>')
    return "\n".join(out) + "\n"


def render_history_flow_svg(h: HFModel, s: StyleConfig | None = None) -> str:
    """Emit the History-Flow comparison figure: one column per revision,
    author-colored segments stacked top-down, column height proportional to
    the document length at that revision."""
    s = s or StyleConfig()
    classes: dict[str, int] = {}
    for author in h.revision_authors:
        classes.setdefault(author, len(classes))
    for column in h.columns:
        for seg in column:
            classes.setdefault(seg.author, len(classes))

    max_len = max((sum(seg.length for seg in col) for col in h.columns), default=0)
    cols = len(h.columns)
    width = 2 * s.margin + max(cols * s.hf_col_width + max(cols - 1, 0) * s.hf_col_gap,
                               s.hf_col_width)
    height = 2 * s.margin + max(max_len * s.hf_y_per_token, s.hf_y_per_token)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        _rect_el(0, 0, width, height, "#ffffff",
                 f' stroke="{s.rect_stroke}" stroke-width="1" class="frame"'),
        f'<g class="columns" stroke="{s.rect_stroke}" stroke-width="0.5">',
    ]
    for c, column in enumerate(h.columns):
        x = s.margin + c * (s.hf_col_width + s.hf_col_gap)
        y = s.margin
        for seg in column:
            fill = s.author_palette[classes[seg.author] % len(s.author_palette)]
            seg_h = seg.length * s.hf_y_per_token
            out.append(_rect_el(x, y, s.hf_col_width, seg_h, fill))
            y += seg_h
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
