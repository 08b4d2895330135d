// Build the scene as SVG DOM nodes, matching the static renderer's draw
// order and default colors: author bands, section bands, edges, node
// rectangles, top heat bar, right heat bar.

import { contentSize, matrixOrigin, rectPixelBox, STYLE } from "./geometry.js";
import type { Bundle } from "./model.js";

const COLORS = {
  persistent: "#d9d9d9",
  deleted: "#cc8080",
  stroke: "#4a4a4a",
  edge: "#8c8c8c",
  authors: ["#f6cfc4", "#c7dcf4", "#cdeec6", "#f4d8ef", "#f8efc0", "#d7d2f3", "#c4ecea", "#e8d3b8"],
  sections: ["#ffffff", "#dce6f1"],
};

// "ember" colormap stops, identical to the static renderer
const HEAT_STOPS: [number, [number, number, number]][] = [
  [0.0, [43, 26, 51]],
  [0.35, [144, 48, 58]],
  [0.7, [224, 112, 40]],
  [1.0, [255, 217, 74]],
];

export function heatColor(value: number): string {
  const v = Math.min(1, Math.max(0, value));
  for (let i = 1; i < HEAT_STOPS.length; i++) {
    const [v0, c0] = HEAT_STOPS[i - 1];
    const [v1, c1] = HEAT_STOPS[i];
    if (v <= v1) {
      const t = v1 === v0 ? 0 : (v - v0) / (v1 - v0);
      const rgb = c0.map((a, k) => Math.round(a + (c1[k] - a) * t));
      return `rgb(${rgb[0]},${rgb[1]},${rgb[2]})`;
    }
  }
  const last = HEAT_STOPS[HEAT_STOPS.length - 1][1];
  return `rgb(${last[0]},${last[1]},${last[2]})`;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function el(name: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

/** Render the bundle into a <g> whose coordinates are content pixels; the
 * caller applies the pan/zoom transform to this group. */
export function buildScene(bundle: Bundle): SVGGElement {
  const s = STYLE;
  const origin = matrixOrigin(s);
  const size = contentSize(bundle, s);
  const contentW = size.width - origin.x - s.barGap - s.barSize - s.margin;
  const rowsH = Math.max(bundle.revision_count, 1) * s.yPerRev;
  const scene = el("g", { class: "scene" }) as SVGGElement;

  scene.appendChild(el("rect", {
    x: 0, y: 0, width: size.width, height: size.height,
    fill: "#ffffff", stroke: COLORS.stroke, "stroke-width": 1,
  }));

  const authorBands = el("g", { class: "author-bands" });
  bundle.author_bands.forEach((cls, i) => {
    authorBands.appendChild(el("rect", {
      x: origin.x, y: origin.y + i * s.yPerRev, width: contentW, height: s.yPerRev,
      fill: COLORS.authors[cls % COLORS.authors.length],
    }));
  });
  scene.appendChild(authorBands);

  const sectionBands = el("g", { class: "section-bands" });
  for (const band of bundle.section_bands) {
    sectionBands.appendChild(el("rect", {
      x: origin.x + band.start * s.xPerToken,
      y: origin.y,
      width: (band.end - band.start) * s.xPerToken,
      height: rowsH,
      fill: COLORS.sections[band.color_class % COLORS.sections.length],
      "fill-opacity": 0.45,
    }));
  }
  scene.appendChild(sectionBands);

  const boxes = new Map(bundle.rects.map((r) => [r.node, rectPixelBox(r, bundle.compact, s)]));
  const rows = new Map(bundle.rects.map((r) => [r.node, r.row]));

  const edges = el("g", { class: "edges" });
  for (const [a, b] of bundle.edges) {
    const boxA = boxes.get(a);
    const boxB = boxes.get(b);
    const rowA = rows.get(a);
    const rowB = rows.get(b);
    if (!boxA || !boxB || rowA === undefined || rowB === undefined) continue;
    if (bundle.compact && rowA === rowB) continue;
    edges.appendChild(el("line", {
      x1: boxA.x + boxA.w,
      y1: origin.y + (rowA - 1 + 0.33) * s.yPerRev,
      x2: boxB.x,
      y2: origin.y + (rowB - 1 + 0.33) * s.yPerRev,
      stroke: COLORS.edge, "stroke-width": 1,
    }));
  }
  scene.appendChild(edges);

  const nodes = el("g", { class: "nodes" });
  for (const rect of bundle.rects) {
    const box = boxes.get(rect.node)!;
    nodes.appendChild(el("rect", {
      x: box.x, y: box.y, width: box.w, height: box.h,
      fill: rect.kind === "persistent" ? COLORS.persistent : COLORS.deleted,
      stroke: COLORS.stroke, "stroke-width": 0.5,
      class: rect.kind, "data-node": rect.node,
    }));
  }
  scene.appendChild(nodes);

  const topBar = el("g", { class: "top-bar" });
  const heat = bundle.bars.column_heat;
  if (heat.length > 0) {
    const bw = contentW / heat.length;
    heat.forEach((v, b) => {
      topBar.appendChild(el("rect", {
        x: origin.x + b * bw, y: s.margin, width: bw, height: s.barSize,
        fill: heatColor(v),
      }));
    });
  }
  scene.appendChild(topBar);

  const rightBar = el("g", { class: "right-bar" });
  bundle.bars.revision_heat.forEach((v, i) => {
    rightBar.appendChild(el("rect", {
      x: origin.x + contentW + s.barGap, y: origin.y + i * s.yPerRev,
      width: s.barSize, height: s.yPerRev,
      fill: heatColor(v),
    }));
  });
  scene.appendChild(rightBar);

  return scene;
}
