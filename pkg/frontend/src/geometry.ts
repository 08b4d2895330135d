// Pixel mapping shared with the static SVG renderer. The formulas and
// defaults are frozen in docs/bundle_schema.md; the two implementations must
// stay in sync for visual parity.

import type { Bundle, Rect } from "./model.js";

export interface Style {
  xPerToken: number;
  yPerRev: number;
  chainGap: number;
  margin: number;
  barSize: number;
  barGap: number;
}

export const STYLE: Style = {
  xPerToken: 8,
  yPerRev: 14,
  chainGap: 3,
  margin: 4,
  barSize: 9,
  barGap: 3,
};

// lane fractions of a row band: alive content on top, deleted content below
const ALIVE_LANE = { top: 0.08, height: 0.5 };
const DEAD_LANE = { top: 0.62, height: 0.3 };

export interface Box {
  x: number;
  y: number;
  w: number;
  h: number;
}

export function matrixOrigin(s: Style = STYLE): { x: number; y: number } {
  return { x: s.margin, y: s.margin + s.barSize + s.barGap };
}

export function rectPixelBox(rect: Rect, compact: boolean, s: Style = STYLE): Box {
  const gap = compact ? 0 : s.chainGap;
  const origin = matrixOrigin(s);
  const lane = rect.kind === "persistent" ? ALIVE_LANE : DEAD_LANE;
  return {
    x: origin.x + rect.x0 * s.xPerToken + rect.shift * gap,
    y: origin.y + (rect.row - 1) * s.yPerRev + lane.top * s.yPerRev,
    w: (rect.x1 - rect.x0) * s.xPerToken,
    h: lane.height * s.yPerRev,
  };
}

export function rectCenter(rect: Rect, compact: boolean, s: Style = STYLE): { x: number; y: number } {
  const box = rectPixelBox(rect, compact, s);
  return { x: box.x + box.w / 2, y: box.y + box.h / 2 };
}

/** Untransformed size of the drawing, matching the static renderer's canvas. */
export function contentSize(bundle: Bundle, s: Style = STYLE): { width: number; height: number } {
  const gap = bundle.compact ? 0 : s.chainGap;
  let extent = bundle.latest_len * s.xPerToken;
  for (const rect of bundle.rects) {
    extent = Math.max(extent, rect.x1 * s.xPerToken + rect.shift * gap);
  }
  if (!bundle.compact && bundle.rects.length > 0) {
    extent += gap;
  }
  extent = Math.max(extent, s.xPerToken);
  const origin = matrixOrigin(s);
  const rows = Math.max(bundle.revision_count, 1);
  return {
    width: origin.x + extent + s.barGap + s.barSize + s.margin,
    height: origin.y + rows * s.yPerRev + s.margin,
  };
}
