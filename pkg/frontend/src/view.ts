// View state (pan/zoom/selection) and hit testing over the loaded bundle.
// The bundle itself is never mutated by any of this.

import { rectPixelBox, STYLE, type Style } from "./geometry.js";
import type { Bundle } from "./model.js";

export const MIN_ZOOM = 0.1;
export const MAX_ZOOM = 50;

export interface ViewState {
  panX: number;
  panY: number;
  zoom: number;
  selected: number | null;
}

export function initialView(): ViewState {
  return { panX: 0, panY: 0, zoom: 1, selected: null };
}

export function clampZoom(zoom: number): number {
  return Math.min(MAX_ZOOM, Math.max(MIN_ZOOM, zoom));
}

/** screen = content * zoom + pan */
export function toScreen(state: ViewState, x: number, y: number): { x: number; y: number } {
  return { x: x * state.zoom + state.panX, y: y * state.zoom + state.panY };
}

export function toContent(state: ViewState, x: number, y: number): { x: number; y: number } {
  return { x: (x - state.panX) / state.zoom, y: (y - state.panY) / state.zoom };
}

/** Zoom about a fixed screen point so the content under the cursor stays put. */
export function zoomAt(state: ViewState, screenX: number, screenY: number, factor: number): ViewState {
  const zoom = clampZoom(state.zoom * factor);
  const pivot = toContent(state, screenX, screenY);
  return {
    ...state,
    zoom,
    panX: screenX - pivot.x * zoom,
    panY: screenY - pivot.y * zoom,
  };
}

export function panBy(state: ViewState, dx: number, dy: number): ViewState {
  return { ...state, panX: state.panX + dx, panY: state.panY + dy };
}

/** Topmost rect containing the pointer (screen pixels), or null.  Topmost =
 * last in paint order, which is the bundle's rect order. */
export function hitTest(
  bundle: Bundle,
  state: ViewState,
  pointerX: number,
  pointerY: number,
  style: Style = STYLE,
): number | null {
  const p = toContent(state, pointerX, pointerY);
  for (let i = bundle.rects.length - 1; i >= 0; i--) {
    const rect = bundle.rects[i];
    const box = rectPixelBox(rect, bundle.compact, style);
    if (p.x >= box.x && p.x < box.x + box.w && p.y >= box.y && p.y < box.y + box.h) {
      return rect.node;
    }
  }
  return null;
}
