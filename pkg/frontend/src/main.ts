// Page wiring: bundle loading (file picker or ?bundle=URL), pan/zoom over
// the scene, click-to-inspect popup. All handlers are synchronous over the
// immutable loaded bundle; reloading simply rebuilds the scene.

import { contentSize } from "./geometry.js";
import { BundleFormatError, parseBundle, type Bundle } from "./model.js";
import { popupContent } from "./popup.js";
import { buildScene } from "./render.js";
import { hitTest, initialView, panBy, zoomAt, type ViewState } from "./view.js";

const svg = document.getElementById("canvas") as unknown as SVGSVGElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const popup = document.getElementById("popup") as HTMLDivElement;
const picker = document.getElementById("picker") as HTMLInputElement;
const status = document.getElementById("status") as HTMLSpanElement;

let bundle: Bundle | null = null;
let view: ViewState = initialView();
let sceneGroup: SVGGElement | null = null;

function showError(message: string): void {
  bundle = null;
  sceneGroup = null;
  svg.replaceChildren();
  popup.hidden = true;
  banner.textContent = message;
  banner.hidden = false;
  status.textContent = "";
}

function applyTransform(): void {
  if (sceneGroup) {
    sceneGroup.setAttribute(
      "transform",
      `translate(${view.panX} ${view.panY}) scale(${view.zoom})`,
    );
  }
}

function loadText(text: string, name: string): void {
  let parsed: Bundle;
  try {
    parsed = parseBundle(text);
  } catch (e) {
    const reason = e instanceof BundleFormatError ? e.message : String(e);
    showError(`cannot load ${name}: ${reason}`);
    return;
  }
  bundle = parsed;
  banner.hidden = true;
  popup.hidden = true;
  view = initialView();
  sceneGroup = buildScene(parsed);
  svg.replaceChildren(sceneGroup);
  const size = contentSize(parsed);
  svg.setAttribute("width", String(Math.max(size.width, 480)));
  svg.setAttribute("height", String(Math.max(size.height, 240)));
  applyTransform();
  const alive = parsed.chain.length;
  status.textContent =
    `${name}: ${parsed.revision_count} revisions, ` +
    `${alive} alive / ${parsed.nodes.length - alive} deleted nodes, ` +
    `${parsed.latest_len} tokens`;
}

function showPopup(nodeId: number, clientX: number, clientY: number): void {
  if (!bundle) return;
  const content = popupContent(bundle, nodeId);
  const payload = document.createElement("div");
  payload.className = "payload";
  payload.textContent = content.payload;
  const meta = document.createElement("div");
  meta.className = "meta";
  meta.textContent = content.lines.join(" · ");
  popup.replaceChildren(payload, meta);
  popup.style.left = `${clientX + 12}px`;
  popup.style.top = `${clientY + 12}px`;
  popup.hidden = false;
}

svg.addEventListener("click", (ev) => {
  if (!bundle) return;
  const rect = svg.getBoundingClientRect();
  const hit = hitTest(bundle, view, ev.clientX - rect.left, ev.clientY - rect.top);
  view = { ...view, selected: hit };
  if (hit === null) {
    popup.hidden = true;
  } else {
    showPopup(hit, ev.clientX, ev.clientY);
  }
});

svg.addEventListener("wheel", (ev) => {
  if (!bundle) return;
  ev.preventDefault();
  const rect = svg.getBoundingClientRect();
  const factor = ev.deltaY < 0 ? 1.15 : 1 / 1.15;
  view = zoomAt(view, ev.clientX - rect.left, ev.clientY - rect.top, factor);
  applyTransform();
}, { passive: false });

let dragging = false;
let lastX = 0;
let lastY = 0;

svg.addEventListener("mousedown", (ev) => {
  dragging = true;
  lastX = ev.clientX;
  lastY = ev.clientY;
});

window.addEventListener("mousemove", (ev) => {
  if (!dragging) return;
  view = panBy(view, ev.clientX - lastX, ev.clientY - lastY);
  lastX = ev.clientX;
  lastY = ev.clientY;
  applyTransform();
});

window.addEventListener("mouseup", () => {
  dragging = false;
});

picker.addEventListener("change", async () => {
  const file = picker.files?.[0];
  if (!file) return;
  loadText(await file.text(), file.name);
});

const param = new URLSearchParams(window.location.search).get("bundle");
if (param) {
  fetch(param)
    .then(async (resp) => {
      if (!resp.ok) throw new Error(`HTTP ${resp.status}`);
      loadText(await resp.text(), param);
    })
    .catch((e) => showError(`cannot fetch ${param}: ${e.message ?? e}`));
}
